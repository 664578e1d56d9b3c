#pragma once

#include "knaster/word.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace knaster {

/// Stand-in for a countable ordinal; only the order on a finite set of
/// labels is ever used.
using Label = std::int64_t;

struct LabelPair {
  Label lo;
  Label hi;

  /// Unordered pair; throws std::invalid_argument when a == b.
  static LabelPair of(Label a, Label b);
  auto operator<=>(const LabelPair&) const = default;
};

struct PairData {
  Word rho;
  std::size_t ell = 0;
  bool operator==(const PairData&) const = default;
};

/// A finite tree with all maximal nodes at `height`, stored as its leaf
/// set. The tree itself is the prefix closure of the leaves.
class FiniteTree {
 public:
  /// Throws std::invalid_argument when `leaves` is empty or a leaf has the
  /// wrong length.
  FiniteTree(std::size_t height, std::set<Word> leaves);

  std::size_t height() const { return height_; }
  const std::set<Word>& leaves() const { return leaves_; }
  bool has_leaf(const Word& w) const { return leaves_.count(w) > 0; }
  /// Nodes of the tree at `level` <= height.
  std::set<Word> level(std::size_t level) const;
  /// Every leaf extended by `k` zeros.
  FiniteTree padded(std::size_t k) const;

  bool operator==(const FiniteTree&) const = default;

 private:
  std::size_t height_;
  std::set<Word> leaves_;
};

/// A condition <u, n, eta, m_star, trees, mu, K>.
struct Condition {
  std::vector<Label> u;  // ascending, distinct
  std::size_t n = 0;
  std::size_t m_star = 0;
  std::map<Label, Word> eta;
  std::vector<FiniteTree> trees;
  std::map<LabelPair, PairData> mu;
  std::map<Label, std::size_t> K;

  bool operator==(const Condition&) const = default;

  bool has_label(Label a) const;
  /// mu at {a, b}; throws std::out_of_range when absent.
  const PairData& pair(Label a, Label b) const;
  const Word& rho(Label a, Label b) const { return pair(a, b).rho; }
  std::size_t ell(Label a, Label b) const { return pair(a, b).ell; }
  /// Every leaf of every tree.
  std::set<Word> all_leaves() const;
};

struct Violation {
  int clause;  // 1..9
  std::string detail;
};

/// Checks clauses (1)-(9). Empty result means p is a condition.
/// Structural problems (clauses 1, 2, 3 and the domain part of 5) are
/// reported alone, since later clauses cannot be read without them.
std::vector<Violation> validate(const Condition& p);
bool is_valid(const Condition& p);

/// u = {label}, n = m_star = 1, eta = <1>, one tree with leaf <1>.
Condition minimal_condition(Label label);

struct OrderCheck {
  bool holds = false;
  std::string reason;  // empty when holds
  explicit operator bool() const { return holds; }
};

/// p <= q (q is stronger). Throws std::invalid_argument when either input
/// fails validation.
OrderCheck leq(const Condition& p, const Condition& q);

/// Raised when a construction produced something the validator rejects.
class ConstructionError : public std::logic_error {
 public:
  ConstructionError(const std::string& what, std::vector<std::string> trace)
      : std::logic_error(what), trace_(std::move(trace)) {}
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

/// Adds `alpha` to u, growing n and m_star by |u| + 1 each: alpha gets a
/// fresh unit vector for eta, each pair {old, alpha} a fresh unit vector for
/// rho and its own two-leaf tree, and alpha a one-leaf tree. Old data is
/// zero-padded.
Condition extend_with_label(const Condition& p, Label alpha);

/// Some q >= p with alpha in u^q, n^q >= min_n and m_star^q >= min_m,
/// reached by extend_with_label with alpha and then with scratch labels
/// above every label used so far.
Condition extend(const Condition& p, Label alpha, std::size_t min_n, std::size_t min_m);

/// Result of the alignment check. `lower` is the condition whose private
/// labels come first; `pi` maps its labels onto the other condition's.
struct Alignment {
  bool aligned = false;
  std::string reason;
  bool swapped = false;  // true when the second argument is `lower`
  std::map<Label, Label> pi;
  explicit operator bool() const { return aligned; }
};

/// Equal n, m_star and trees; equal-size label sets meeting in a nonempty
/// common initial segment with nonempty private parts, all private labels
/// of one below all private labels of the other; and eta, K, mu transported
/// by the order isomorphism. Either argument order is accepted.
Alignment aligned(const Condition& p, const Condition& q);

/// Index bookkeeping for amalgamation. k0 + 1 shared labels, k1 + 1
/// private labels on each side. Every private/cross pair gets its own unit
/// tail nu_k, k < k_star.
struct AmalgamationLayout {
  std::size_t k0;
  std::size_t k1;

  std::size_t k_star() const;
  std::size_t extra_trees() const { return (k1 + 1) * (k1 + 1); }
  /// Tail appended to eta of the j-th upper private label.
  std::size_t upper_eta_tail(std::size_t j) const { return j; }
  /// Tail of rho between the i-th shared and j-th upper private label.
  std::size_t shared_upper_tail(std::size_t i, std::size_t j) const { return (k1 + 1) + i * (k1 + 1) + j; }
  /// Tail of rho between the i-th lower and j-th upper private label.
  std::size_t lower_upper_tail(std::size_t i, std::size_t j) const {
    return (k0 + 2) * (k1 + 1) + i * (k1 + 1) + j;
  }
  /// Tail of rho between upper private labels i < j.
  std::size_t upper_upper_tail(std::size_t i, std::size_t j) const;
  /// Every tail index assigned, in assignment order.
  std::vector<std::size_t> all_tails() const;
};

/// Common upper bound of two aligned conditions. Throws
/// std::invalid_argument when not aligned and ConstructionError when the
/// result fails validation.
Condition amalgamate(const Condition& p, const Condition& q);

/// Copy of p with every label outside `keep` renamed to successive
/// integers above max(u^p), preserving order. Produces aligned partners.
Condition rename_private_labels(const Condition& p, std::size_t keep);

/// Which shape a pair from an equal-sum quadruple takes.
enum class PairShape {
  EtaEta,     // {eta_a, eta_b}
  CrossRho,   // {eta_a + rho_ab, eta_b}
  SameRho,    // {eta_a + rho_ab, eta_a}
};

std::string to_string(PairShape s);

struct QuadrupleReport {
  std::array<Word, 2> first;   // b0, c0
  std::array<Word, 2> second;  // b1, c1
  Word sum;
  bool certified = false;
  Label alpha = 0;  // oriented so that `shape` reads with alpha first
  Label beta = 0;
  std::size_t shape_pair = 0;  // which of first/second matched `shape`
  PairShape shape = PairShape::EtaEta;
};

/// Every pair-of-pairs of distinct leaves with equal sums, each with the
/// labels alpha != beta such that the four leaves are
/// {eta_a, eta_b, eta_a + rho_ab, eta_b + rho_ab}. Uncertified entries are
/// claim violations. Requires p valid.
std::vector<QuadrupleReport> scan_equal_sums(const Condition& p);

/// The clause-(9) list: eta in label order, then rho over pairs a < b in
/// lexicographic pair order, with what each vector is.
struct BasisVector {
  enum class Kind { Eta, Rho } kind;
  Label a;
  Label b;  // == a for Eta
  Word value;
};
std::vector<BasisVector> condition_basis(const Condition& p);

}  // namespace knaster
