#include "knaster/indep.hpp"

#include "knaster/gf2.hpp"
#include "knaster/kernels.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace knaster {

namespace {

std::vector<std::size_t> pair_support(const Gf2Eliminator& basis, const Word& x, const Word& y) {
  const auto support = basis.represent(x + y);
  if (!support || support->size() != 2) {
    throw std::invalid_argument("decompose_shared: " + x.to_string() + " + " + y.to_string() +
                                " is not a sum of two distinct basis vectors");
  }
  return *support;
}

Gf2Eliminator independent_basis(std::span<const Word> B, std::size_t length, const char* who) {
  Gf2Eliminator elim(length);
  for (const Word& b : B) {
    if (b.size() != length) throw std::invalid_argument(std::string(who) + ": length mismatch");
    if (!elim.insert(b)) throw std::invalid_argument(std::string(who) + ": B is linearly dependent");
  }
  return elim;
}

}  // namespace

SharedDecomposition decompose_shared(const Word& a, const Word& b, const Word& c, std::span<const Word> B) {
  if (a == b || a == c || b == c) throw std::invalid_argument("decompose_shared: a, b, c must be pairwise distinct");
  if (b.size() != a.size() || c.size() != a.size()) throw std::invalid_argument("decompose_shared: length mismatch");
  const Gf2Eliminator basis = independent_basis(B, a.size(), "decompose_shared");

  const auto ab = pair_support(basis, a, b);
  const auto ac = pair_support(basis, a, c);
  pair_support(basis, b, c);

  std::vector<std::size_t> shared;
  std::set_intersection(ab.begin(), ab.end(), ac.begin(), ac.end(), std::back_inserter(shared));
  if (shared.size() != 1) {
    throw std::invalid_argument("decompose_shared: supports of a+b and a+c share " + std::to_string(shared.size()) +
                                " vectors, expected exactly one");
  }
  const std::size_t eta = shared.front();
  const std::size_t nu = ab[0] == eta ? ab[1] : ab[0];
  const std::size_t rho = ac[0] == eta ? ac[1] : ac[0];
  return {B[eta], B[nu], B[rho]};
}

Word recover_translation(std::span<const Word> A, std::span<const Word> B) {
  std::vector<Word> members(A.begin(), A.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() < 5) throw std::invalid_argument("recover_translation: A needs at least 5 distinct members");
  const std::size_t n = members.front().size();
  for (const Word& w : members)
    if (w.size() != n) throw std::invalid_argument("recover_translation: length mismatch in A");

  const Gf2Eliminator basis = independent_basis(B, n, "recover_translation");
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto support = basis.represent(members[i] + members[j]);
      if (!support || support->size() != 2) {
        throw std::invalid_argument("recover_translation: " + members[i].to_string() + " + " +
                                    members[j].to_string() + " is not in B + B");
      }
    }
  }

  const SharedDecomposition dec = decompose_shared(members[0], members[1], members[2], B);
  const Word x = members[0] + dec.eta;

  const std::set<Word> targets(B.begin(), B.end());
  std::vector<std::string> trace{"a0 = " + members[0].to_string(), "eta = " + dec.eta.to_string(),
                                 "x = " + x.to_string()};
  for (const Word& a : members) {
    if (!targets.count(a + x)) {
      trace.push_back(a.to_string() + " + x = " + (a + x).to_string() + " is not in B");
      throw LemmaViolation("recover_translation: translated member left B", trace);
    }
  }
  return x;
}

std::vector<Word> brute_translation(std::span<const Word> A, std::span<const Word> B, TranslationScan scan) {
  if (A.empty()) throw std::invalid_argument("brute_translation: empty A");
  if (scan == TranslationScan::Full) return kernels::translation_scan_parallel(A, B);

  const std::set<Word> targets(B.begin(), B.end());
  const Word& a0 = *std::min_element(A.begin(), A.end());
  std::set<Word> candidates{Word::zero(a0.size())};
  for (const Word& beta : B) candidates.insert(a0 + beta);

  std::vector<Word> out;
  for (const Word& x : candidates) {
    const bool fits = std::all_of(A.begin(), A.end(), [&](const Word& a) { return targets.count(a + x) > 0; });
    if (fits) out.push_back(x);
  }
  return out;
}

}  // namespace knaster
