#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace knaster {

/// A fixed-length binary sequence, an element of {0,1}^n.
///
/// Coordinate k lives in block k/64 at bit k%64. Sequences up to 64
/// coordinates stay inline; longer ones spill to the heap. Bits beyond
/// `size()` in the last block are always zero.
class Word {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  Word() = default;
  /// All-zero word of the given length.
  explicit Word(std::size_t len);

  static Word zero(std::size_t len) { return Word(len); }
  static Word ones(std::size_t len);
  /// Unit vector with a single 1 at coordinate `pos`.
  static Word unit(std::size_t len, std::size_t pos);
  /// Parses a string over {0,1}; leftmost character is coordinate 0.
  static Word parse(std::string_view bits);
  /// Word whose coordinates read, left to right, as the binary digits of
  /// `index` (most significant first). Index order equals lex order.
  static Word from_lex_index(std::uint64_t index, std::size_t len);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  bool operator[](std::size_t k) const {
    return (blocks_[k / kBlockBits] >> (k % kBlockBits)) & 1U;
  }
  bool is_zero() const;
  std::size_t popcount() const;

  /// Inverse of from_lex_index; requires size() <= 64.
  std::uint64_t lex_index() const;

  Word with_bit(std::size_t k, bool value) const;
  std::string to_string() const;

  /// Coordinatewise sum mod 2. Throws std::invalid_argument on length mismatch.
  Word operator+(const Word& other) const;
  Word& operator+=(const Word& other);

  /// Appends `k` zero coordinates.
  Word pad_zeros(std::size_t k) const;
  /// Appends the coordinates of `tail`.
  Word concat(const Word& tail) const;
  /// First `k` coordinates. Throws std::out_of_range when k > size().
  Word restrict(std::size_t k) const;
  /// True when this word is an initial segment of `other`.
  bool is_prefix_of(const Word& other) const;

  bool operator==(const Word& other) const = default;
  /// Orders by length, then lexicographically.
  std::strong_ordering operator<=>(const Word& other) const;

  std::size_t hash() const;

  const Block* blocks() const { return blocks_.data(); }
  std::size_t block_count() const { return blocks_.size(); }

 private:
  void set_bit(std::size_t k, bool value);

  std::size_t len_ = 0;
  boost::container::small_vector<Block, 1> blocks_;
};

/// Sum mod 2, same as `a + b`.
Word add(const Word& a, const Word& b);
/// True iff a precedes b lexicographically. Throws on length mismatch.
bool lex_less(const Word& a, const Word& b);
/// Least index where a and b differ, or nullopt when equal. Throws on length mismatch.
std::optional<std::size_t> first_diff(const Word& a, const Word& b);
Word pad_zeros(const Word& w, std::size_t k);
Word restrict(const Word& w, std::size_t k);

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace knaster

template <>
struct std::hash<knaster::Word> {
  std::size_t operator()(const knaster::Word& w) const { return w.hash(); }
};
