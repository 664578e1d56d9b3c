#pragma once

#include "knaster/coloring.hpp"
#include "knaster/word.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace knaster {

/// An outcome the lemma guarantees failed: either the input broke a
/// precondition the caller was responsible for, or there is a bug.
class LemmaViolation : public std::runtime_error {
 public:
  LemmaViolation(const std::string& what, std::vector<std::string> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

using Quadruple = std::array<Word, 4>;

/// Lex-increasing (a, b, c, d) whose cross first-difference indices
/// (a,c), (b,c), (a,d), (b,d) all coincide. Throws std::invalid_argument
/// on length mismatch or length <= 1.
bool is_four_arrangement(const Word& a, const Word& b, const Word& c, const Word& d);

/// Some 4-arrangement drawn from `words`, or nullopt. Sets of at most 64
/// words are scanned exhaustively in combination order; larger sets go
/// through the prefix-split search, which is also complete.
std::optional<Quadruple> find_four_arrangement(std::span<const Word> words);

/// Exhaustive combination scan; the oracle for find_four_arrangement.
std::optional<Quadruple> find_four_arrangement_exhaustive(std::span<const Word> words);

/// Complete search for large sets. A 4-arrangement exists iff some prefix
/// node has at least two members below each of its children.
std::optional<Quadruple> find_four_arrangement_split(std::span<const Word> words);

struct TriangleCheckMode {
  enum class Kind { Exhaustive, Sampled } kind = Kind::Exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static TriangleCheckMode exhaustive() { return {}; }
  static TriangleCheckMode sampled(std::uint64_t count, std::uint64_t seed) {
    return {Kind::Sampled, count, seed};
  }
};

/// Looks for three distinct words with all pairs colored 0. Exhaustive
/// mode is refused above ell = 8.
std::optional<std::array<Word, 3>> check_no_zero_triangle(const PairColoring& h, TriangleCheckMode mode);

/// {x : x != a and h(x, a) = 0}, ascending.
std::vector<Word> zero_neighborhood(const PairColoring& h, const Word& a);

struct ArrangementCertificate {
  std::vector<Word> members;  // ascending
  Quadruple arrangement;
  /// "staged" when a..e came out of the staged picks, otherwise
  /// "zero-neighborhood:<word>" naming the point whose Z-set was used.
  std::string origin;
  std::vector<std::string> trace;

  bool operator==(const ArrangementCertificate& other) const {
    return members == other.members && arrangement == other.arrangement;
  }
};

/// Independent re-check: at least 5 distinct members of length h.ell(),
/// every pair colored 1, arrangement drawn from members and a genuine
/// 4-arrangement. Returns a description of the first failure.
std::optional<std::string> verify_certificate(const PairColoring& h, const ArrangementCertificate& cert);

/// Builds a 1-homogeneous set of at least 5 words containing a
/// 4-arrangement, assuming h has no 0-colored triangle.
///
/// a = 0^ell and d = the lex-last x != a with h(a, x) = 1. Then b, c and e
/// come from staged picks: cells at levels ell-3, ell-6, ... under a fixed
/// start pattern (01, 10, 001), each stage filtered by one of the earlier
/// points, and a final pick filtered by the last one. A failed pick against
/// filter point f means 7 or 8 words sitting below one node of depth 3 all
/// lie in Z_f; Z_f is then large, 1-homogeneous, and the certificate is
/// taken from it instead.
///
/// Throws std::invalid_argument when ell < 16 and LemmaViolation when no
/// certificate survives re-verification.
ArrangementCertificate extract_homogeneous(const PairColoring& h);

}  // namespace knaster
