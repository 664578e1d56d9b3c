#include "knaster/word.hpp"

#include <bit>
#include <stdexcept>

namespace knaster {

namespace {

std::size_t blocks_for(std::size_t len) { return (len + Word::kBlockBits - 1) / Word::kBlockBits; }

void require_same_length(const Word& a, const Word& b, const char* op) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(op) + ": length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

Word::Word(std::size_t len) : len_(len), blocks_(blocks_for(len), 0) {}

Word Word::ones(std::size_t len) {
  Word w(len);
  for (std::size_t b = 0; b < w.blocks_.size(); ++b) {
    const std::size_t used = std::min(kBlockBits, len - b * kBlockBits);
    w.blocks_[b] = used == kBlockBits ? ~Block{0} : ((Block{1} << used) - 1);
  }
  return w;
}

Word Word::unit(std::size_t len, std::size_t pos) {
  if (pos >= len) throw std::out_of_range("Word::unit: position outside word");
  Word w(len);
  w.set_bit(pos, true);
  return w;
}

Word Word::parse(std::string_view bits) {
  Word w(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      w.set_bit(k, true);
    } else if (bits[k] != '0') {
      throw std::invalid_argument("Word::parse: unexpected character '" + std::string(1, bits[k]) +
                                  "' at offset " + std::to_string(k));
    }
  }
  return w;
}

Word Word::from_lex_index(std::uint64_t index, std::size_t len) {
  if (len > kBlockBits) throw std::invalid_argument("Word::from_lex_index: length exceeds 64");
  Word w(len);
  if (len == 0) return w;
  // Reverse so that the most significant digit lands on coordinate 0.
  Block bits = 0;
  for (std::size_t k = 0; k < len; ++k) {
    bits |= ((index >> (len - 1 - k)) & 1U) << k;
  }
  w.blocks_[0] = bits;
  return w;
}

std::uint64_t Word::lex_index() const {
  if (len_ > kBlockBits) throw std::invalid_argument("Word::lex_index: length exceeds 64");
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < len_; ++k) index = (index << 1) | ((*this)[k] ? 1U : 0U);
  return index;
}

bool Word::is_zero() const {
  for (Block b : blocks_)
    if (b != 0) return false;
  return true;
}

std::size_t Word::popcount() const {
  std::size_t total = 0;
  for (Block b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

void Word::set_bit(std::size_t k, bool value) {
  const Block mask = Block{1} << (k % kBlockBits);
  if (value) {
    blocks_[k / kBlockBits] |= mask;
  } else {
    blocks_[k / kBlockBits] &= ~mask;
  }
}

Word Word::with_bit(std::size_t k, bool value) const {
  if (k >= len_) throw std::out_of_range("Word::with_bit: position outside word");
  Word w = *this;
  w.set_bit(k, value);
  return w;
}

std::string Word::to_string() const {
  std::string s(len_, '0');
  for (std::size_t k = 0; k < len_; ++k)
    if ((*this)[k]) s[k] = '1';
  return s;
}

Word& Word::operator+=(const Word& other) {
  require_same_length(*this, other, "add");
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] ^= other.blocks_[b];
  return *this;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w += other;
  return w;
}

Word Word::pad_zeros(std::size_t k) const {
  Word w = *this;
  w.len_ = len_ + k;
  w.blocks_.resize(blocks_for(w.len_), 0);
  return w;
}

Word Word::concat(const Word& tail) const {
  Word w = pad_zeros(tail.size());
  for (std::size_t k = 0; k < tail.size(); ++k)
    if (tail[k]) w.set_bit(len_ + k, true);
  return w;
}

Word Word::restrict(std::size_t k) const {
  if (k > len_) {
    throw std::out_of_range("restrict: " + std::to_string(k) + " exceeds length " + std::to_string(len_));
  }
  Word w = *this;
  w.len_ = k;
  w.blocks_.resize(blocks_for(k));
  if (k % kBlockBits != 0) w.blocks_.back() &= (Block{1} << (k % kBlockBits)) - 1;
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return len_ <= other.len_ && other.restrict(len_) == *this;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = len_ <=> other.len_; c != 0) return c;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Block diff = blocks_[b] ^ other.blocks_[b];
    if (diff != 0) {
      const Block low = diff & (~diff + 1);
      return (blocks_[b] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t Word::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ len_;
  for (Block b : blocks_) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Word add(const Word& a, const Word& b) { return a + b; }

bool lex_less(const Word& a, const Word& b) {
  require_same_length(a, b, "lex_less");
  return a < b;
}

std::optional<std::size_t> first_diff(const Word& a, const Word& b) {
  require_same_length(a, b, "first_diff");
  for (std::size_t blk = 0; blk < a.block_count(); ++blk) {
    const Word::Block diff = a.blocks()[blk] ^ b.blocks()[blk];
    if (diff != 0) return blk * Word::kBlockBits + static_cast<std::size_t>(std::countr_zero(diff));
  }
  return std::nullopt;
}

Word pad_zeros(const Word& w, std::size_t k) { return w.pad_zeros(k); }

Word restrict(const Word& w, std::size_t k) { return w.restrict(k); }

}  // namespace knaster
