#pragma once

#include "knaster/word.hpp"

#include <optional>
#include <span>
#include <vector>

namespace knaster {

/// Incremental Gaussian elimination over GF(2).
///
/// Each stored row remembers which inserted vectors were summed to produce
/// it, so membership queries can return a certificate. Rows are reduced
/// against pivots in insertion order; the pivot of a row is its lowest set
/// coordinate.
class Gf2Eliminator {
 public:
  explicit Gf2Eliminator(std::size_t length) : length_(length) {}

  /// Inserts `v`. Returns false (and stores nothing) when `v` already lies
  /// in the span of the vectors inserted so far.
  bool insert(const Word& v);

  /// Indices (into the insertion sequence) of a subset summing to `target`,
  /// or nullopt when `target` is outside the span.
  std::optional<std::vector<std::size_t>> represent(const Word& target) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  std::size_t length() const { return length_; }

 private:
  struct Row {
    Word bits;
    Word combination;  // over inserted indices, length grows with insertions
    std::size_t pivot;
  };
  void reduce(Word& bits, Word& combination) const;

  std::size_t length_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

/// Dimension of the span of `ws`. All words must share a length.
std::size_t rank(std::span<const Word> ws);
bool is_independent(std::span<const Word> ws);

/// The unique index set S with sum of basis[S] equal to `target`, sorted
/// ascending; nullopt when `target` lies outside the span. Throws
/// std::invalid_argument when `basis` is dependent or lengths disagree.
std::optional<std::vector<std::size_t>> express_in_basis(const Word& target, std::span<const Word> basis);

}  // namespace knaster
