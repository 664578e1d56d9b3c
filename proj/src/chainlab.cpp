#include "knaster/chainlab.hpp"

#include "knaster/gf2.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace knaster {

Chain build_chain(const std::vector<Label>& labels, std::size_t target_n, std::uint64_t seed) {
  if (labels.empty()) throw std::invalid_argument("build_chain: no labels");
  std::set<Label> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw std::invalid_argument("build_chain: duplicate labels");

  // n after s extension steps does not depend on which labels are added.
  std::size_t steps = 0;
  for (std::size_t n = 1; steps + 1 < labels.size() || n < target_n; ++steps) n += steps + 2;
  const std::size_t scratch = steps - (labels.size() - 1);

  std::vector<bool> is_scratch(steps, false);
  std::fill(is_scratch.begin(), is_scratch.begin() + static_cast<std::ptrdiff_t>(scratch), true);
  std::mt19937_64 rng(seed);
  std::shuffle(is_scratch.begin(), is_scratch.end(), rng);

  Chain chain;
  chain.stages.push_back(minimal_condition(labels.front()));
  Label next_scratch = *distinct.rbegin() + 1;
  std::size_t next_label = 1;
  for (bool s : is_scratch) {
    const Label alpha = s ? next_scratch++ : labels[next_label++];
    chain.stages.push_back(extend(chain.stages.back(), alpha, 0, 0));
  }
  return chain;
}

namespace {

void stability(const Condition& s, const Condition& t, std::size_t si, std::size_t ti, std::vector<std::string>& out) {
  const std::string where = "stages " + std::to_string(si) + " < " + std::to_string(ti) + ": ";
  if (t.n < s.n) {
    out.push_back(where + "n decreases");
    return;
  }
  for (Label a : s.u) {
    if (!t.has_label(a)) {
      out.push_back(where + "label " + std::to_string(a) + " disappears");
      continue;
    }
    if (t.eta.at(a).restrict(s.n) != s.eta.at(a)) out.push_back(where + "eta(" + std::to_string(a) + ") unstable");
  }
  for (const auto& [key, data] : s.mu) {
    auto it = t.mu.find(key);
    if (it == t.mu.end() || !data.rho.is_prefix_of(it->second.rho)) {
      out.push_back(where + "rho{" + std::to_string(key.lo) + "," + std::to_string(key.hi) + "} unstable");
    }
  }
  for (std::size_t m = 0; m < s.m_star; ++m) {
    if (m >= t.m_star || t.trees[m].level(s.n) != s.trees[m].leaves()) {
      out.push_back(where + "tree " + std::to_string(m) + " unstable at level " + std::to_string(s.n));
    }
  }
}

}  // namespace

std::vector<std::string> chain_violations(const Chain& chain) {
  std::vector<std::string> out;
  if (chain.stages.empty()) return {"chain has no stages"};
  bool all_valid = true;
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    for (const Violation& v : validate(chain.stages[i])) {
      all_valid = false;
      out.push_back("stage " + std::to_string(i) + ": clause (" + std::to_string(v.clause) + "): " + v.detail);
    }
  }
  if (!all_valid) return out;
  for (std::size_t i = 0; i + 1 < chain.stages.size(); ++i) {
    if (const OrderCheck c = leq(chain.stages[i], chain.stages[i + 1]); !c) {
      out.push_back("stages " + std::to_string(i) + ", " + std::to_string(i + 1) + ": " + c.reason);
    }
  }
  for (std::size_t s = 0; s < chain.stages.size(); ++s)
    for (std::size_t t = s + 1; t < chain.stages.size(); ++t) stability(chain.stages[s], chain.stages[t], s, t, out);
  return out;
}

ApproximationReport approximation(const Chain& chain) {
  if (chain.stages.empty()) throw std::invalid_argument("approximation: empty chain");
  ApproximationReport report;
  const Condition& last = chain.stages.back();
  report.approx.n = last.n;
  report.approx.h = last.eta;
  for (const FiniteTree& t : last.trees) report.approx.T.push_back(t.leaves());
  for (const auto& [key, data] : last.mu) report.approx.r.emplace(key, data.rho);
  for (std::size_t s = 0; s < chain.stages.size(); ++s)
    for (std::size_t t = s + 1; t < chain.stages.size(); ++t)
      stability(chain.stages[s], chain.stages[t], s, t, report.stability_violations);
  return report;
}

WitnessReport intersection_witnesses(const GenericApproximation& g, Label alpha, Label beta) {
  if (alpha == beta) throw std::invalid_argument("intersection_witnesses: labels must differ");
  if (!g.h.count(alpha) || !g.h.count(beta)) throw std::invalid_argument("intersection_witnesses: unknown label");
  std::map<Word, std::size_t> tree_of;
  for (std::size_t m = 0; m < g.T.size(); ++m)
    for (const Word& w : g.T[m]) tree_of.emplace(w, m);

  const Word& ha = g.h.at(alpha);
  const Word& hb = g.h.at(beta);
  const Word& r = g.r.at(LabelPair::of(alpha, beta));

  WitnessReport report;
  for (const Word& value : {Word::zero(g.n), r, ha + hb, ha + hb + r}) {
    Witness w{value, value + ha, 0, value + hb, 0};
    auto a_it = tree_of.find(w.alpha_leaf);
    auto b_it = tree_of.find(w.beta_leaf);
    if (a_it == tree_of.end()) {
      report.violations.push_back(value.to_string() + ": h_alpha + " + w.alpha_leaf.to_string() + " has no leaf certificate");
    } else {
      w.alpha_tree = a_it->second;
    }
    if (b_it == tree_of.end()) {
      report.violations.push_back(value.to_string() + ": h_beta + " + w.beta_leaf.to_string() + " has no leaf certificate");
    } else {
      w.beta_tree = b_it->second;
    }
    report.witnesses.push_back(std::move(w));
  }
  std::set<Word> distinct;
  for (const Witness& w : report.witnesses) distinct.insert(w.value);
  if (distinct.size() != 4) report.violations.push_back("witnesses are not pairwise distinct");
  return report;
}

int SumClass::color() const {
  switch (kind) {
    case Kind::TypeA:
      return 1;
    case Kind::TypeB:
    case Kind::TypeC:
      return 0;
    case Kind::Other:
      break;
  }
  return -1;
}

std::string to_string(SumClass::Kind k) {
  switch (k) {
    case SumClass::Kind::TypeA:
      return "A";
    case SumClass::Kind::TypeB:
      return "B";
    case SumClass::Kind::TypeC:
      return "C";
    case SumClass::Kind::Other:
      break;
  }
  return "other";
}

namespace {

class SumClassifier {
 public:
  explicit SumClassifier(const Condition& p) : p_(p), basis_(condition_basis(p)), elim_(p.n) {
    for (const BasisVector& v : basis_) independent_ = elim_.insert(v.value) && independent_;
  }

  SumClass operator()(const Word& s) const { return independent_ ? by_support(s) : by_comparison(s); }

 private:
  SumClass by_support(const Word& s) const {
    const auto support = elim_.represent(s);
    if (!support) return {};
    std::vector<Label> etas;
    std::vector<const BasisVector*> rhos;
    for (std::size_t idx : *support) {
      if (basis_[idx].kind == BasisVector::Kind::Eta) {
        etas.push_back(basis_[idx].a);
      } else {
        rhos.push_back(&basis_[idx]);
      }
    }
    if (etas.size() == 2 && rhos.empty()) return {SumClass::Kind::TypeA, etas[0], etas[1]};
    if (etas.empty() && rhos.size() == 1) return {SumClass::Kind::TypeC, rhos[0]->a, rhos[0]->b};
    if (etas.size() == 2 && rhos.size() == 1 && rhos[0]->a == etas[0] && rhos[0]->b == etas[1]) {
      return {SumClass::Kind::TypeB, etas[0], etas[1]};
    }
    return {};
  }

  SumClass by_comparison(const Word& s) const {
    for (auto kind : {SumClass::Kind::TypeC, SumClass::Kind::TypeB, SumClass::Kind::TypeA}) {
      for (const auto& [key, data] : p_.mu) {
        const Word etas = p_.eta.at(key.lo) + p_.eta.at(key.hi);
        const Word candidate = kind == SumClass::Kind::TypeC ? data.rho
                               : kind == SumClass::Kind::TypeB ? etas + data.rho
                                                               : etas;
        if (candidate == s) return {kind, key.lo, key.hi};
      }
    }
    return {};
  }

  const Condition& p_;
  std::vector<BasisVector> basis_;
  Gf2Eliminator elim_;
  bool independent_ = true;
};

}  // namespace

SumClass classify_sum(const Condition& p, const Word& s) {
  if (s.size() != p.n) throw std::invalid_argument("classify_sum: word length differs from n");
  return SumClassifier(p)(s);
}

TriangleReport triangle_scan(const Condition& p) {
  const SumClassifier classify(p);
  const std::set<Word> leaf_set = p.all_leaves();
  const std::vector<Word> leaves(leaf_set.begin(), leaf_set.end());
  std::set<Word> sums;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) sums.insert(leaves[i] + leaves[j]);

  std::vector<Word> zero_sums;
  for (const Word& s : sums)
    if (classify(s).color() == 0) zero_sums.push_back(s);

  TriangleReport report;
  report.realized_sums = sums.size();
  report.color_zero_sums = zero_sums.size();
  for (std::size_t i = 0; i < zero_sums.size() && report.pass; ++i) {
    for (std::size_t j = i + 1; j < zero_sums.size(); ++j) {
      const Word third = zero_sums[i] + zero_sums[j];
      if (classify(third).color() == 0) {
        report.pass = false;
        report.counterexample = std::array<Word, 3>{zero_sums[i], zero_sums[j], third};
        break;
      }
    }
  }
  return report;
}

}  // namespace knaster
