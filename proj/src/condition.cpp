#include "knaster/gf2.hpp"
#include "knaster/poset.hpp"

#include <algorithm>
#include <sstream>

namespace knaster {

LabelPair LabelPair::of(Label a, Label b) {
  if (a == b) throw std::invalid_argument("LabelPair: labels must differ");
  return a < b ? LabelPair{a, b} : LabelPair{b, a};
}

FiniteTree::FiniteTree(std::size_t height, std::set<Word> leaves) : height_(height), leaves_(std::move(leaves)) {
  if (leaves_.empty()) throw std::invalid_argument("FiniteTree: empty leaf set");
  for (const Word& w : leaves_) {
    if (w.size() != height_) {
      throw std::invalid_argument("FiniteTree: leaf " + w.to_string() + " does not have length " +
                                  std::to_string(height_));
    }
  }
}

std::set<Word> FiniteTree::level(std::size_t level) const {
  std::set<Word> out;
  for (const Word& w : leaves_) out.insert(w.restrict(level));
  return out;
}

FiniteTree FiniteTree::padded(std::size_t k) const {
  std::set<Word> out;
  for (const Word& w : leaves_) out.insert(w.pad_zeros(k));
  return FiniteTree(height_ + k, std::move(out));
}

bool Condition::has_label(Label a) const { return std::binary_search(u.begin(), u.end(), a); }

const PairData& Condition::pair(Label a, Label b) const {
  auto it = mu.find(LabelPair::of(a, b));
  if (it == mu.end()) {
    throw std::out_of_range("no mu entry for {" + std::to_string(a) + ", " + std::to_string(b) + "}");
  }
  return it->second;
}

std::set<Word> Condition::all_leaves() const {
  std::set<Word> out;
  for (const FiniteTree& t : trees) out.insert(t.leaves().begin(), t.leaves().end());
  return out;
}

std::vector<BasisVector> condition_basis(const Condition& p) {
  std::vector<BasisVector> out;
  for (Label a : p.u) out.push_back({BasisVector::Kind::Eta, a, a, p.eta.at(a)});
  for (std::size_t i = 0; i < p.u.size(); ++i)
    for (std::size_t j = i + 1; j < p.u.size(); ++j)
      out.push_back({BasisVector::Kind::Rho, p.u[i], p.u[j], p.rho(p.u[i], p.u[j])});
  return out;
}

namespace {

std::string lbl(Label a) { return std::to_string(a); }
std::string pr(Label a, Label b) { return "{" + lbl(a) + "," + lbl(b) + "}"; }

std::vector<Violation> structural(const Condition& p) {
  std::vector<Violation> out;
  auto add = [&](int clause, std::string detail) { out.push_back({clause, std::move(detail)}); };

  if (p.u.empty()) add(1, "u is empty");
  if (p.n == 0) add(1, "n must be positive");
  if (p.m_star == 0) add(1, "m_star must be positive");
  for (std::size_t i = 0; i < p.u.size(); ++i) {
    if (p.u[i] < 0) add(1, "label " + lbl(p.u[i]) + " is negative");
    if (i > 0 && p.u[i - 1] >= p.u[i]) add(1, "u is not strictly increasing at label " + lbl(p.u[i]));
  }
  if (p.eta.size() != p.u.size()) add(1, "eta has " + std::to_string(p.eta.size()) + " entries for " +
                                             std::to_string(p.u.size()) + " labels");
  for (const auto& [a, w] : p.eta) {
    if (!p.has_label(a)) add(1, "eta defined at label " + lbl(a) + " outside u");
    if (w.size() != p.n) add(1, "eta(" + lbl(a) + ") has length " + std::to_string(w.size()));
  }

  if (p.trees.size() != p.m_star) {
    add(2, std::to_string(p.trees.size()) + " trees for m_star = " + std::to_string(p.m_star));
  }
  for (std::size_t m = 0; m < p.trees.size(); ++m) {
    if (p.trees[m].height() != p.n) add(2, "tree " + std::to_string(m) + " has height " +
                                               std::to_string(p.trees[m].height()));
  }

  const std::size_t expected_pairs = p.u.size() * (p.u.size() - (p.u.empty() ? 0 : 1)) / 2;
  if (p.mu.size() != expected_pairs) {
    add(3, "mu has " + std::to_string(p.mu.size()) + " entries, expected " + std::to_string(expected_pairs));
  }
  for (const auto& [key, data] : p.mu) {
    if (key.lo >= key.hi) add(3, "mu key " + pr(key.lo, key.hi) + " is not an ordered pair of distinct labels");
    if (!p.has_label(key.lo) || !p.has_label(key.hi)) add(3, "mu defined at " + pr(key.lo, key.hi) + " outside u");
    if (data.rho.size() != p.n) add(3, "rho" + pr(key.lo, key.hi) + " has length " + std::to_string(data.rho.size()));
    if (data.ell >= p.m_star) add(3, "ell" + pr(key.lo, key.hi) + " = " + std::to_string(data.ell) + " >= m_star");
  }

  if (p.K.size() != p.u.size()) add(5, "K has " + std::to_string(p.K.size()) + " entries for " +
                                           std::to_string(p.u.size()) + " labels");
  for (const auto& [a, k] : p.K) {
    if (!p.has_label(a)) add(5, "K defined at label " + lbl(a) + " outside u");
    if (k >= p.m_star) add(5, "K(" + lbl(a) + ") = " + std::to_string(k) + " >= m_star");
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const Condition& p) {
  std::vector<Violation> out = structural(p);
  if (!out.empty()) return out;
  auto add = [&](int clause, std::string detail) { out.push_back({clause, std::move(detail)}); };
  const auto& u = p.u;

  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const PairData& d = p.pair(u[i], u[j]);
      for (Label x : {u[i], u[j]}) {
        const Word leaf = p.eta.at(x) + d.rho;
        if (!p.trees[d.ell].has_leaf(leaf)) {
          add(4, "eta(" + lbl(x) + ") + rho" + pr(u[i], u[j]) + " = " + leaf.to_string() + " is not a leaf of tree " +
                     std::to_string(d.ell));
        }
      }
    }
  }

  for (Label a : u) {
    const std::size_t k = p.K.at(a);
    if (!p.trees[k].has_leaf(p.eta.at(a))) {
      add(5, "eta(" + lbl(a) + ") = " + p.eta.at(a).to_string() + " is not a leaf of tree " + std::to_string(k));
    }
  }

  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      for (std::size_t k = j + 1; k < u.size(); ++k) {
        const Label a = u[i], b = u[j], c = u[k];
        const std::set<std::size_t> lhs{p.K.at(a), p.K.at(c), p.ell(a, c)};
        const std::set<std::size_t> rhs{p.K.at(b), p.K.at(c), p.ell(b, c)};
        if (lhs == rhs) add(6, "labels " + lbl(a) + " < " + lbl(b) + " < " + lbl(c) + " give equal index sets");
      }
    }
  }

  std::map<Word, std::size_t> owner;
  for (std::size_t m = 0; m < p.trees.size(); ++m) {
    for (const Word& leaf : p.trees[m].leaves()) {
      auto [it, fresh] = owner.emplace(leaf, m);
      if (!fresh) {
        add(7, "leaf " + leaf.to_string() + " lies in trees " + std::to_string(it->second) + " and " +
                   std::to_string(m));
      }
    }
  }

  std::set<Word> allowed;
  for (Label a : u) {
    allowed.insert(p.eta.at(a));
    for (Label b : u)
      if (a != b) allowed.insert(p.eta.at(a) + p.rho(a, b));
  }
  for (std::size_t m = 0; m < p.trees.size(); ++m) {
    for (const Word& leaf : p.trees[m].leaves()) {
      if (!allowed.count(leaf)) {
        add(8, "leaf " + leaf.to_string() + " of tree " + std::to_string(m) + " is neither an eta nor an eta + rho");
      }
    }
  }

  Gf2Eliminator elim(p.n);
  for (const BasisVector& v : condition_basis(p)) {
    if (!elim.insert(v.value)) {
      const std::string what =
          v.kind == BasisVector::Kind::Eta ? "eta(" + lbl(v.a) + ")" : "rho" + pr(v.a, v.b);
      add(9, what + " = " + v.value.to_string() + " lies in the span of the vectors listed before it");
    }
  }
  return out;
}

bool is_valid(const Condition& p) { return validate(p).empty(); }

Condition minimal_condition(Label label) {
  Condition p;
  p.u = {label};
  p.n = 1;
  p.m_star = 1;
  p.eta.emplace(label, Word::parse("1"));
  p.trees.emplace_back(1, std::set<Word>{Word::parse("1")});
  p.K.emplace(label, 0);
  return p;
}

namespace {

void require_valid(const Condition& p, const char* who, const char* which) {
  const auto violations = validate(p);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string(who) + ": " + which + " is not a condition (clause " +
                                std::to_string(violations.front().clause) + ": " + violations.front().detail + ")");
  }
}

OrderCheck fails(std::string why) { return {false, std::move(why)}; }

}  // namespace

OrderCheck leq(const Condition& p, const Condition& q) {
  require_valid(p, "leq", "left argument");
  require_valid(q, "leq", "right argument");

  for (Label a : p.u)
    if (!q.has_label(a)) return fails("(i) label " + lbl(a) + " is missing from the stronger condition");
  if (p.n > q.n) return fails("(i) n decreases");
  if (p.m_star > q.m_star) return fails("(i) m_star decreases");

  for (Label a : p.u) {
    if (q.eta.at(a).restrict(p.n) != p.eta.at(a)) return fails("(ii) eta(" + lbl(a) + ") is not extended");
  }

  for (std::size_t m = 0; m < p.m_star; ++m) {
    if (q.trees[m].level(p.n) != p.trees[m].leaves()) {
      return fails("(iii) tree " + std::to_string(m) + " changes at level " + std::to_string(p.n));
    }
  }

  for (Label a : p.u) {
    if (p.K.at(a) != q.K.at(a)) return fails("(iv) K(" + lbl(a) + ") changes");
  }
  for (const auto& [key, data] : p.mu) {
    const PairData& other = q.pair(key.lo, key.hi);
    if (other.ell != data.ell) return fails("(iv) ell" + pr(key.lo, key.hi) + " changes");
    if (!data.rho.is_prefix_of(other.rho)) return fails("(iv) rho" + pr(key.lo, key.hi) + " is not extended");
  }
  return {true, {}};
}

}  // namespace knaster
