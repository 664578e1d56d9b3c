#include "knaster/poset.hpp"

#include <algorithm>

namespace knaster {

namespace {

std::vector<std::string> violation_trace(const std::vector<Violation>& violations) {
  std::vector<std::string> out;
  for (const Violation& v : violations) out.push_back("clause (" + std::to_string(v.clause) + "): " + v.detail);
  return out;
}

}  // namespace

Condition extend_with_label(const Condition& p, Label alpha) {
  if (p.has_label(alpha)) {
    throw std::invalid_argument("extend_with_label: label " + std::to_string(alpha) + " is already in u");
  }
  if (alpha < 0) throw std::invalid_argument("extend_with_label: labels must be non-negative");
  const std::size_t k = p.u.size() - 1;  // old labels are u[0..k]
  const std::size_t grow = k + 2;

  Condition q;
  q.u = p.u;
  q.u.insert(std::upper_bound(q.u.begin(), q.u.end(), alpha), alpha);
  q.n = p.n + grow;
  q.m_star = p.m_star + grow;

  for (const auto& [a, w] : p.eta) q.eta.emplace(a, w.pad_zeros(grow));
  const Word eta_alpha = Word::unit(q.n, p.n);
  q.eta.emplace(alpha, eta_alpha);

  for (const auto& [key, data] : p.mu) q.mu.emplace(key, PairData{data.rho.pad_zeros(grow), data.ell});
  for (const FiniteTree& t : p.trees) q.trees.push_back(t.padded(grow));

  for (std::size_t i = 0; i <= k; ++i) {
    const Label old = p.u[i];
    const Word rho = Word::unit(q.n, p.n + i + 1);
    const std::size_t ell = p.m_star + i;
    q.mu.emplace(LabelPair::of(old, alpha), PairData{rho, ell});
    q.trees.emplace_back(q.n, std::set<Word>{q.eta.at(old) + rho, eta_alpha + rho});
  }
  q.trees.emplace_back(q.n, std::set<Word>{eta_alpha});

  q.K = p.K;
  q.K.emplace(alpha, p.m_star + k + 1);

  if (const auto violations = validate(q); !violations.empty()) {
    throw ConstructionError("extend_with_label: result is not a condition", violation_trace(violations));
  }
  return q;
}

Condition extend(const Condition& p, Label alpha, std::size_t min_n, std::size_t min_m) {
  Condition q = p.has_label(alpha) ? p : extend_with_label(p, alpha);
  Label next_scratch = std::max(q.u.back(), alpha) + 1;
  while (q.n < min_n || q.m_star < min_m) {
    q = extend_with_label(q, next_scratch++);
  }
  return q;
}

}  // namespace knaster
