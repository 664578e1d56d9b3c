#pragma once

// Seeded instance generators shared by the CLI drivers and the acceptance
// suite. Instance i of a run is keyed on (seed, i) alone.

#include "knaster/word.hpp"

#include <cstdint>
#include <vector>

namespace knaster {

struct TranslationInstance {
  std::vector<Word> A;  // a subset of B of size >= 5, translated by x
  std::vector<Word> B;  // independent, 5 <= |B| <= 12
  Word x;
};

/// n uniform in [6, max_n], B random independent, A a random subset of B
/// of size at least 5 shifted by a random x. Requires max_n >= 6.
TranslationInstance translation_instance(std::uint64_t seed, std::uint64_t index, std::size_t max_n);

}  // namespace knaster
