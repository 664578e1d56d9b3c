#pragma once

// Exhaustive scans over {0,1}^ell. Each kernel has an OpenMP version and a
// plain serial reference; the two must return identical results, and the
// tests hold them to that.

#include "knaster/coloring.hpp"
#include "knaster/word.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace knaster::kernels {

using Triple = std::array<std::uint64_t, 3>;

/// Lex-first triple x < y < z (by lex index) whose three pairs are all
/// 0-colored, or nullopt.
std::optional<Triple> zero_triangle_exhaustive_serial(const PairColoring& h);
std::optional<Triple> zero_triangle_exhaustive_parallel(const PairColoring& h);

/// The i-th sampled triple: three distinct lex indices drawn from a
/// counter-based generator keyed on (seed, i).
Triple sample_triple(std::uint64_t seed, std::uint64_t i, std::uint64_t space_size);

/// First sample index i < count whose triple is a 0-triangle, returned
/// together with the triple sorted ascending.
std::optional<std::pair<std::uint64_t, Triple>> zero_triangle_sampled_serial(const PairColoring& h,
                                                                            std::uint64_t count,
                                                                            std::uint64_t seed);
std::optional<std::pair<std::uint64_t, Triple>> zero_triangle_sampled_parallel(const PairColoring& h,
                                                                              std::uint64_t count,
                                                                              std::uint64_t seed);

/// Lex indices x != a with h(x, a) = 0, ascending.
std::vector<std::uint64_t> zero_neighborhood_serial(const PairColoring& h, std::uint64_t a);
std::vector<std::uint64_t> zero_neighborhood_parallel(const PairColoring& h, std::uint64_t a);

/// All x in {0,1}^n with A + x contained in B, ascending. Requires n <= 30.
std::vector<Word> translation_scan_serial(std::span<const Word> A, std::span<const Word> B);
std::vector<Word> translation_scan_parallel(std::span<const Word> A, std::span<const Word> B);

}  // namespace knaster::kernels
