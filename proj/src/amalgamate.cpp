#include "knaster/poset.hpp"

#include <algorithm>

namespace knaster {

namespace {

std::string lbl(Label a) { return std::to_string(a); }

Alignment reject(std::string why) {
  Alignment out;
  out.reason = std::move(why);
  return out;
}

std::vector<Label> set_difference(const std::vector<Label>& a, const std::vector<Label>& b) {
  std::vector<Label> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Label> set_intersection(const std::vector<Label>& a, const std::vector<Label>& b) {
  std::vector<Label> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Checks lower/upper with lower's private labels first.
Alignment check_oriented(const Condition& lower, const Condition& upper) {
  const std::vector<Label> root = set_intersection(lower.u, upper.u);
  const std::vector<Label> lower_private = set_difference(lower.u, upper.u);
  const std::vector<Label> upper_private = set_difference(upper.u, lower.u);
  if (!std::equal(root.begin(), root.end(), lower.u.begin()) || !std::equal(root.begin(), root.end(), upper.u.begin())) {
    return reject("(*)2 the common labels are not an initial segment of both label sets");
  }
  if (lower_private.back() >= upper_private.front()) {
    return reject("(*)2 private labels interleave: max " + lbl(lower_private.back()) + " >= min " +
                  lbl(upper_private.front()));
  }

  Alignment out;
  for (std::size_t i = 0; i < lower.u.size(); ++i) out.pi.emplace(lower.u[i], upper.u[i]);
  for (Label a : lower.u) {
    const Label b = out.pi.at(a);
    if (lower.eta.at(a) != upper.eta.at(b)) return reject("(*)3 eta(" + lbl(a) + ") is not transported");
    if (lower.K.at(a) != upper.K.at(b)) return reject("(*)3 K(" + lbl(a) + ") is not transported");
  }
  for (const auto& [key, data] : lower.mu) {
    if (upper.pair(out.pi.at(key.lo), out.pi.at(key.hi)) != data) {
      return reject("(*)3 mu{" + lbl(key.lo) + "," + lbl(key.hi) + "} is not transported");
    }
  }
  out.aligned = true;
  return out;
}

void require_valid(const Condition& p, const char* which) {
  if (const auto v = validate(p); !v.empty()) {
    throw std::invalid_argument(std::string("aligned: ") + which + " is not a condition (clause " +
                                std::to_string(v.front().clause) + ": " + v.front().detail + ")");
  }
}

}  // namespace

Alignment aligned(const Condition& p, const Condition& q) {
  require_valid(p, "first argument");
  require_valid(q, "second argument");
  if (p.n != q.n) return reject("(*)1 n differs");
  if (p.m_star != q.m_star) return reject("(*)1 m_star differs");
  if (p.trees != q.trees) return reject("(*)1 trees differ");
  if (p.u.size() != q.u.size()) return reject("(*)2 label sets have different sizes");

  const std::vector<Label> root = set_intersection(p.u, q.u);
  if (root.empty()) return reject("label sets are disjoint");
  if (root.size() == p.u.size()) return reject("label sets coincide, no private labels");

  const bool p_lower = set_difference(p.u, q.u).back() < set_difference(q.u, p.u).front();
  Alignment out = p_lower ? check_oriented(p, q) : check_oriented(q, p);
  out.swapped = !p_lower;
  return out;
}

std::size_t AmalgamationLayout::k_star() const {
  // (k1 - 1)(k1 + 2) is negative at k1 = 0 and always even.
  const auto a = static_cast<std::int64_t>(k0);
  const auto b = static_cast<std::int64_t>(k1);
  return static_cast<std::size_t>((b + 1) * (a + b + 3) + (b - 1) * (b + 2) / 2 + 1);
}

std::size_t AmalgamationLayout::upper_upper_tail(std::size_t i, std::size_t j) const {
  return (k1 + 1) * (k0 + k1 + 3) + i * (2 * k1 - i + 1) / 2 + (j - i - 1);
}

std::vector<std::size_t> AmalgamationLayout::all_tails() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= k1; ++j) out.push_back(upper_eta_tail(j));
  for (std::size_t i = 0; i <= k0; ++i)
    for (std::size_t j = 0; j <= k1; ++j) out.push_back(shared_upper_tail(i, j));
  for (std::size_t i = 0; i <= k1; ++i)
    for (std::size_t j = 0; j <= k1; ++j) out.push_back(lower_upper_tail(i, j));
  for (std::size_t i = 0; i <= k1; ++i)
    for (std::size_t j = i + 1; j <= k1; ++j) out.push_back(upper_upper_tail(i, j));
  return out;
}

Condition amalgamate(const Condition& p, const Condition& q) {
  const Alignment al = aligned(p, q);
  if (!al) throw std::invalid_argument("amalgamate: conditions are not aligned: " + al.reason);
  const Condition& lo = al.swapped ? q : p;
  const Condition& hi = al.swapped ? p : q;

  const std::vector<Label> gamma = set_intersection(lo.u, hi.u);
  const std::vector<Label> alpha = set_difference(lo.u, hi.u);
  const std::vector<Label> beta = set_difference(hi.u, lo.u);
  const AmalgamationLayout layout{gamma.size() - 1, alpha.size() - 1};
  const std::size_t k_star = layout.k_star();
  const std::size_t k0 = layout.k0, k1 = layout.k1;
  const auto nu = [k_star](std::size_t i) { return Word::unit(k_star, i); };

  std::vector<std::string> trace{"k0 = " + std::to_string(k0), "k1 = " + std::to_string(k1),
                                 "k* = " + std::to_string(k_star)};

  Condition r;
  r.u.insert(r.u.end(), lo.u.begin(), lo.u.end());
  r.u.insert(r.u.end(), beta.begin(), beta.end());
  r.n = lo.n + k_star;
  r.m_star = lo.m_star + layout.extra_trees();

  for (Label a : lo.u) r.eta.emplace(a, lo.eta.at(a).pad_zeros(k_star));
  for (std::size_t j = 0; j <= k1; ++j) r.eta.emplace(beta[j], hi.eta.at(beta[j]).concat(nu(layout.upper_eta_tail(j))));

  for (Label a : lo.u) r.K.emplace(a, lo.K.at(a));
  for (Label b : beta) r.K.emplace(b, hi.K.at(b));

  for (const auto& [key, data] : lo.mu) r.mu.emplace(key, PairData{data.rho.pad_zeros(k_star), data.ell});
  for (std::size_t i = 0; i <= k0; ++i) {
    for (std::size_t j = 0; j <= k1; ++j) {
      const PairData& old = hi.pair(gamma[i], beta[j]);
      r.mu.emplace(LabelPair::of(gamma[i], beta[j]),
                   PairData{old.rho.concat(nu(layout.shared_upper_tail(i, j))), old.ell});
    }
  }
  for (std::size_t i = 0; i <= k1; ++i) {
    for (std::size_t j = 0; j <= k1; ++j) {
      r.mu.emplace(LabelPair::of(alpha[i], beta[j]),
                   PairData{Word::zero(hi.n).concat(nu(layout.lower_upper_tail(i, j))), hi.m_star + i * (k1 + 1) + j});
    }
  }
  for (std::size_t i = 0; i <= k1; ++i) {
    for (std::size_t j = i + 1; j <= k1; ++j) {
      const PairData& old = hi.pair(beta[i], beta[j]);
      r.mu.emplace(LabelPair::of(beta[i], beta[j]),
                   PairData{old.rho.concat(nu(layout.upper_upper_tail(i, j))), old.ell});
    }
  }

  // Old trees: padded leaves plus the leaves contributed by the upper
  // private labels. Then one fresh two-leaf tree per lower/upper pair.
  std::vector<std::set<Word>> leaves(r.m_star);
  for (std::size_t m = 0; m < hi.m_star; ++m) {
    for (const Word& w : hi.trees[m].leaves()) leaves[m].insert(w.pad_zeros(k_star));
  }
  for (Label b : beta) leaves[r.K.at(b)].insert(r.eta.at(b));
  auto add_pair_leaves = [&](Label x, Label y) {
    const PairData& d = r.pair(x, y);
    leaves[d.ell].insert(r.eta.at(x) + d.rho);
    leaves[d.ell].insert(r.eta.at(y) + d.rho);
  };
  for (Label g : gamma)
    for (Label b : beta) add_pair_leaves(g, b);
  for (std::size_t i = 0; i <= k1; ++i)
    for (std::size_t j = i + 1; j <= k1; ++j) add_pair_leaves(beta[i], beta[j]);
  for (Label a : alpha)
    for (Label b : beta) add_pair_leaves(a, b);

  for (std::size_t m = 0; m < r.m_star; ++m) {
    if (leaves[m].empty()) throw ConstructionError("amalgamate: tree " + std::to_string(m) + " is empty", trace);
    r.trees.emplace_back(r.n, std::move(leaves[m]));
  }

  if (const auto violations = validate(r); !violations.empty()) {
    for (const Violation& v : violations) trace.push_back("clause (" + std::to_string(v.clause) + "): " + v.detail);
    throw ConstructionError("amalgamate: result is not a condition", trace);
  }
  return r;
}

Condition rename_private_labels(const Condition& p, std::size_t keep) {
  if (keep == 0 || keep >= p.u.size()) {
    throw std::invalid_argument("rename_private_labels: keep must leave a nonempty root and nonempty private part");
  }
  std::map<Label, Label> rename;
  Label next = p.u.back() + 1;
  for (std::size_t i = 0; i < p.u.size(); ++i) rename.emplace(p.u[i], i < keep ? p.u[i] : next++);

  Condition q;
  q.n = p.n;
  q.m_star = p.m_star;
  q.trees = p.trees;
  for (Label a : p.u) q.u.push_back(rename.at(a));
  for (const auto& [a, w] : p.eta) q.eta.emplace(rename.at(a), w);
  for (const auto& [a, k] : p.K) q.K.emplace(rename.at(a), k);
  for (const auto& [key, data] : p.mu) q.mu.emplace(LabelPair::of(rename.at(key.lo), rename.at(key.hi)), data);
  return q;
}

}  // namespace knaster
