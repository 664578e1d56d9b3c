#pragma once

#include "knaster/poset.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace knaster {

/// Conditions increasing under leq, each one a single extend_with_label
/// step above the previous.
struct Chain {
  std::vector<Condition> stages;
  bool operator==(const Chain&) const = default;
};

/// Starts at minimal_condition(labels[0]) and adds one label per stage
/// until every label is present and n >= target_n. Scratch labels (above
/// every given label) are appended as needed; the seed only decides where
/// they are interleaved among the given labels. Throws on duplicate or
/// empty `labels`.
Chain build_chain(const std::vector<Label>& labels, std::size_t target_n, std::uint64_t seed);

/// Per-stage validity, consecutive leq, and stability of eta, rho and
/// tree levels between every pair of stages. Empty when all hold.
std::vector<std::string> chain_violations(const Chain& chain);

/// Finite stage of the generic objects: h_a, T_m, r_ab at height n.
struct GenericApproximation {
  std::size_t n = 0;
  std::map<Label, Word> h;
  std::vector<std::set<Word>> T;
  std::map<LabelPair, Word> r;
};

struct ApproximationReport {
  GenericApproximation approx;
  std::vector<std::string> stability_violations;
};

/// Snapshot of the last stage, plus the stability sweep over all stage
/// pairs s < t: eta, rho and the level-n^s tree nodes of stage t agree
/// with stage s.
ApproximationReport approximation(const Chain& chain);

struct Witness {
  Word value;
  Word alpha_leaf;  // value = h_alpha + alpha_leaf
  std::size_t alpha_tree = 0;
  Word beta_leaf;  // value = h_beta + beta_leaf
  std::size_t beta_tree = 0;
};

struct WitnessReport {
  std::vector<Witness> witnesses;  // 0, r, h_a + h_b, h_a + h_b + r
  std::vector<std::string> violations;
};

/// The four elements 0, r_ab, h_a + h_b, h_a + h_b + r_ab of
/// (h_a + B) and (h_b + B), each certified by a leaf on both sides.
/// Missing certificates and coincidences are reported as violations.
WitnessReport intersection_witnesses(const GenericApproximation& g, Label alpha, Label beta);

struct SumClass {
  enum class Kind { TypeA, TypeB, TypeC, Other } kind = Kind::Other;
  Label alpha = 0;
  Label beta = 0;
  /// 1 for TypeA, 0 for TypeB/TypeC, -1 for Other.
  int color() const;
};

std::string to_string(SumClass::Kind k);

/// TypeA: s = eta_a + eta_b. TypeB: s = eta_a + eta_b + rho_ab.
/// TypeC: s = rho_ab. Decided by the decomposition of s in the clause-(9)
/// basis when that basis is independent; otherwise by direct comparison
/// in the order C, B, A over label pairs (only reachable for non-conditions).
SumClass classify_sum(const Condition& p, const Word& s);

struct TriangleReport {
  bool pass = true;
  std::size_t realized_sums = 0;
  std::size_t color_zero_sums = 0;
  /// s, s', s + s' when all three are color 0.
  std::optional<std::array<Word, 3>> counterexample;
};

/// Over sums of pairs of distinct leaves: no two color-0 sums whose sum is
/// also color 0.
TriangleReport triangle_scan(const Condition& p);

}  // namespace knaster
