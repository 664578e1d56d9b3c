#pragma once

#include "knaster/word.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace knaster {

enum class ColoringStrategy { AllOne, Matching, Bipartite, SeededTriangleFree };

std::string to_string(ColoringStrategy s);
/// Accepts the CLI spellings: all-one, matching, bipartite, seeded-triangle-free.
ColoringStrategy parse_strategy(const std::string& name);

/// Symmetric 2-coloring of pairs of distinct length-ell words.
///
/// Words are addressed by lex index (see Word::from_lex_index) so that
/// kernels can iterate the whole space with integers. Colorings are either
/// an explicit rule, evaluated lazily, or a stored set of 0-colored edges.
class PairColoring {
 public:
  enum class Representation { ExplicitRule, StoredGraph };
  using Rule = std::function<bool(std::uint64_t, std::uint64_t)>;

  /// `is_zero(x, y)` must be symmetric; it is never called with x == y.
  static PairColoring from_rule(std::size_t ell, std::string name, Rule is_zero);
  /// Every pair not listed gets color 1.
  static PairColoring from_zero_edges(std::size_t ell, std::string name,
                                      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& zero_edges);

  std::size_t ell() const { return ell_; }
  std::uint64_t space_size() const { return std::uint64_t{1} << ell_; }
  Representation representation() const { return representation_; }
  const std::string& name() const { return name_; }

  /// Color of the pair {x, y} by lex index. Throws on x == y.
  int color(std::uint64_t x, std::uint64_t y) const;
  int color(const Word& a, const Word& b) const;
  bool zero(std::uint64_t x, std::uint64_t y) const { return x != y && rule_(x, y); }

 private:
  PairColoring(std::size_t ell, std::string name, Representation rep, Rule rule);

  std::size_t ell_;
  std::string name_;
  Representation representation_;
  Rule rule_;
};

/// Colorings whose 0-graph is triangle-free by construction:
///  - all-one: no 0-edges
///  - matching: {a, b} is 0 iff b = a + 1^ell
///  - bipartite: {a, b} is 0 iff exactly one of a, b starts with 1
///  - seeded-triangle-free: a seeded random subgraph of a seeded random
///    bipartite graph (sides by parity of a masked popcount)
/// Requires 2 <= ell <= 62.
PairColoring gen_star_coloring(std::size_t ell, ColoringStrategy strategy, std::uint64_t seed);

}  // namespace knaster
