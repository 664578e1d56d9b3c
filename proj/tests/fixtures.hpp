#pragma once

#include "knaster/poset.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace knaster::testing {

inline Word W(const std::string& bits) { return Word::parse(bits); }

inline FiniteTree tree(std::initializer_list<const char*> leaves) {
  std::set<Word> out;
  std::size_t height = 0;
  for (const char* l : leaves) {
    out.insert(Word::parse(l));
    height = out.begin()->size();
  }
  return FiniteTree(height, out);
}

/// The two-label condition, written out by hand from the density formulas
/// applied to minimal_condition(5) with new label 9.
inline Condition worked_pair() {
  Condition p;
  p.u = {5, 9};
  p.n = 3;
  p.m_star = 3;
  p.eta = {{5, W("100")}, {9, W("010")}};
  p.trees = {tree({"100"}), tree({"101", "011"}), tree({"010"})};
  p.mu = {{LabelPair{5, 9}, PairData{W("001"), 1}}};
  p.K = {{5, 0}, {9, 2}};
  return p;
}

/// worked_pair() with 9 renamed to 13.
inline Condition worked_pair_copy() {
  Condition p = worked_pair();
  p.u = {5, 13};
  p.eta = {{5, W("100")}, {13, W("010")}};
  p.mu = {{LabelPair{5, 13}, PairData{W("001"), 1}}};
  p.K = {{5, 0}, {13, 2}};
  return p;
}

/// The amalgam of worked_pair() and worked_pair_copy(), by hand.
inline Condition worked_amalgam() {
  Condition r;
  r.u = {5, 9, 13};
  r.n = 6;
  r.m_star = 4;
  r.eta = {{5, W("100000")}, {9, W("010000")}, {13, W("010100")}};
  r.trees = {tree({"100000"}), tree({"101000", "011000", "101010", "011110"}), tree({"010000", "010100"}),
             tree({"010001", "010101"})};
  r.mu = {{LabelPair{5, 9}, PairData{W("001000"), 1}},
          {LabelPair{5, 13}, PairData{W("001010"), 1}},
          {LabelPair{9, 13}, PairData{W("000001"), 3}}};
  r.K = {{5, 0}, {9, 2}, {13, 2}};
  return r;
}

inline Word random_word(std::mt19937_64& rng, std::size_t len) {
  Word w(len);
  for (std::size_t k = 0; k < len; ++k)
    if (rng() & 1U) w = w.with_bit(k, true);
  return w;
}

/// Subset-XOR oracle: true iff no nonempty subset sums to zero.
inline bool independent_by_subsets(const std::vector<Word>& ws) {
  if (ws.empty()) return true;
  const std::size_t count = ws.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
    Word sum = Word::zero(ws.front().size());
    for (std::size_t i = 0; i < count; ++i)
      if ((mask >> i) & 1U) sum += ws[i];
    if (sum.is_zero()) return false;
  }
  return true;
}

}  // namespace knaster::testing
