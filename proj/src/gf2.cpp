#include "knaster/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace knaster {

namespace {

void require_length(const Word& w, std::size_t length) {
  if (w.size() != length) {
    throw std::invalid_argument("gf2: length mismatch (" + std::to_string(w.size()) + " vs " +
                                std::to_string(length) + ")");
  }
}

Word widen(const Word& combination, std::size_t len) {
  return combination.size() >= len ? combination : combination.pad_zeros(len - combination.size());
}

}  // namespace

void Gf2Eliminator::reduce(Word& bits, Word& combination) const {
  for (const Row& row : rows_) {
    if (bits[row.pivot]) {
      bits += row.bits;
      combination += widen(row.combination, combination.size());
    }
  }
}

bool Gf2Eliminator::insert(const Word& v) {
  require_length(v, length_);
  Word bits = v;
  Word combination = Word::unit(inserted_ + 1, inserted_);
  reduce(bits, combination);
  ++inserted_;
  const auto pivot = first_diff(bits, Word::zero(length_));
  if (!pivot) return false;
  rows_.push_back(Row{std::move(bits), std::move(combination), *pivot});
  return true;
}

std::optional<std::vector<std::size_t>> Gf2Eliminator::represent(const Word& target) const {
  require_length(target, length_);
  Word bits = target;
  Word combination = Word::zero(inserted_);
  reduce(bits, combination);
  if (!bits.is_zero()) return std::nullopt;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < combination.size(); ++i)
    if (combination[i]) support.push_back(i);
  return support;
}

std::size_t rank(std::span<const Word> ws) {
  if (ws.empty()) return 0;
  Gf2Eliminator elim(ws.front().size());
  for (const Word& w : ws) elim.insert(w);
  return elim.rank();
}

bool is_independent(std::span<const Word> ws) { return rank(ws) == ws.size(); }

std::optional<std::vector<std::size_t>> express_in_basis(const Word& target, std::span<const Word> basis) {
  Gf2Eliminator elim(target.size());
  for (const Word& b : basis) {
    if (!elim.insert(b)) throw std::invalid_argument("express_in_basis: basis is linearly dependent");
  }
  return elim.represent(target);
}

}  // namespace knaster
