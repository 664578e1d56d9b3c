#include "knaster/coloring.hpp"

#include "knaster/random.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace knaster {

std::string to_string(ColoringStrategy s) {
  switch (s) {
    case ColoringStrategy::AllOne:
      return "all-one";
    case ColoringStrategy::Matching:
      return "matching";
    case ColoringStrategy::Bipartite:
      return "bipartite";
    case ColoringStrategy::SeededTriangleFree:
      return "seeded-triangle-free";
  }
  return "unknown";
}

ColoringStrategy parse_strategy(const std::string& name) {
  if (name == "all-one") return ColoringStrategy::AllOne;
  if (name == "matching") return ColoringStrategy::Matching;
  if (name == "bipartite") return ColoringStrategy::Bipartite;
  if (name == "seeded-triangle-free") return ColoringStrategy::SeededTriangleFree;
  throw std::invalid_argument("unknown coloring strategy '" + name + "'");
}

PairColoring::PairColoring(std::size_t ell, std::string name, Representation rep, Rule rule)
    : ell_(ell), name_(std::move(name)), representation_(rep), rule_(std::move(rule)) {
  if (ell_ < 1 || ell_ > 62) throw std::invalid_argument("PairColoring: ell must be in [1, 62]");
}

PairColoring PairColoring::from_rule(std::size_t ell, std::string name, Rule is_zero) {
  return PairColoring(ell, std::move(name), Representation::ExplicitRule, std::move(is_zero));
}

PairColoring PairColoring::from_zero_edges(std::size_t ell, std::string name,
                                           const std::vector<std::pair<std::uint64_t, std::uint64_t>>& zero_edges) {
  if (ell > 31) throw std::invalid_argument("PairColoring: stored graphs need ell <= 31");
  auto edges = std::make_shared<std::unordered_set<std::uint64_t>>();
  auto key = [ell](std::uint64_t x, std::uint64_t y) {
    if (x > y) std::swap(x, y);
    return (x << ell) | y;
  };
  for (auto [x, y] : zero_edges) {
    if (x == y) throw std::invalid_argument("PairColoring: loop edge");
    edges->insert(key(x, y));
  }
  return PairColoring(ell, std::move(name), Representation::StoredGraph,
                      [edges, key](std::uint64_t x, std::uint64_t y) { return edges->count(key(x, y)) > 0; });
}

int PairColoring::color(std::uint64_t x, std::uint64_t y) const {
  if (x == y) throw std::invalid_argument("PairColoring::color: pair of equal words");
  return rule_(x, y) ? 0 : 1;
}

int PairColoring::color(const Word& a, const Word& b) const {
  if (a.size() != ell_ || b.size() != ell_) throw std::invalid_argument("PairColoring::color: wrong word length");
  return color(a.lex_index(), b.lex_index());
}

PairColoring gen_star_coloring(std::size_t ell, ColoringStrategy strategy, std::uint64_t seed) {
  if (ell < 2 || ell > 62) throw std::invalid_argument("gen_star_coloring: ell must be in [2, 62]");
  const std::uint64_t all = (std::uint64_t{1} << ell) - 1;
  const std::uint64_t top = std::uint64_t{1} << (ell - 1);
  switch (strategy) {
    case ColoringStrategy::AllOne:
      return PairColoring::from_rule(ell, "all-one", [](std::uint64_t, std::uint64_t) { return false; });
    case ColoringStrategy::Matching:
      return PairColoring::from_rule(ell, "matching",
                                     [all](std::uint64_t x, std::uint64_t y) { return (x ^ y) == all; });
    case ColoringStrategy::Bipartite:
      return PairColoring::from_rule(ell, "bipartite",
                                     [top](std::uint64_t x, std::uint64_t y) { return ((x ^ y) & top) != 0; });
    case ColoringStrategy::SeededTriangleFree: {
      // Nonzero mask so both sides are nonempty.
      std::uint64_t mask = mix64(seed ^ 0xa5a5a5a5a5a5a5a5ULL) & all;
      if (mask == 0) mask = top;
      const std::uint64_t edge_salt = mix64(seed + 0x632be59bd9b4e019ULL);
      return PairColoring::from_rule(
          ell, "seeded-triangle-free", [mask, edge_salt](std::uint64_t x, std::uint64_t y) {
            const bool crosses = ((std::popcount(x & mask) ^ std::popcount(y & mask)) & 1) != 0;
            if (!crosses) return false;
            if (x > y) std::swap(x, y);
            return (mix64(edge_salt ^ mix64(x) ^ (y * 0xbf58476d1ce4e5b9ULL)) & 1U) != 0;
          });
    }
  }
  throw std::invalid_argument("gen_star_coloring: unknown strategy");
}

}  // namespace knaster
