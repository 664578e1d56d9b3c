#include "knaster/gf2.hpp"
#include "knaster/poset.hpp"

#include <algorithm>

namespace knaster {

std::string to_string(PairShape s) {
  switch (s) {
    case PairShape::EtaEta:
      return "eta-eta";
    case PairShape::CrossRho:
      return "cross-rho";
    case PairShape::SameRho:
      return "same-rho";
  }
  return "unknown";
}

namespace {

using Pair = std::array<Word, 2>;

bool same_pair(const Pair& p, const Word& x, const Word& y) {
  return (p[0] == x && p[1] == y) || (p[0] == y && p[1] == x);
}

// Orients (a, b) and finds the pair of the quadruple matching one of the
// three admissible shapes.
bool assign_shape(const Condition& p, QuadrupleReport& rep, Label a, Label b) {
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    const Word& ex = p.eta.at(x);
    const Word& ey = p.eta.at(y);
    const Word& rho = p.rho(x, y);
    for (std::size_t i = 0; i < 2; ++i) {
      const Pair& pr = i == 0 ? rep.first : rep.second;
      std::optional<PairShape> shape;
      if (same_pair(pr, ex, ey)) shape = PairShape::EtaEta;
      else if (same_pair(pr, ex + rho, ey)) shape = PairShape::CrossRho;
      else if (same_pair(pr, ex + rho, ex)) shape = PairShape::SameRho;
      if (shape) {
        rep.alpha = x;
        rep.beta = y;
        rep.shape_pair = i;
        rep.shape = *shape;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<QuadrupleReport> scan_equal_sums(const Condition& p) {
  const std::set<Word> leaf_set = p.all_leaves();
  const std::vector<Word> leaves(leaf_set.begin(), leaf_set.end());

  // Labels named by each leaf's decomposition in the clause-(9) basis.
  const std::vector<BasisVector> basis = condition_basis(p);
  Gf2Eliminator elim(p.n);
  for (const BasisVector& v : basis) elim.insert(v.value);
  std::map<Word, std::set<Label>> named;
  for (const Word& leaf : leaves) {
    std::set<Label>& labels = named[leaf];
    if (auto support = elim.represent(leaf)) {
      for (std::size_t idx : *support) {
        labels.insert(basis[idx].a);
        labels.insert(basis[idx].b);
      }
    }
  }

  std::map<Word, std::vector<Pair>> by_sum;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) by_sum[leaves[i] + leaves[j]].push_back({leaves[i], leaves[j]});

  std::vector<QuadrupleReport> out;
  for (const auto& [sum, pairs] : by_sum) {
    // Two pairs with the same sum sharing a word would be equal, so any two
    // entries here are four distinct leaves.
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        QuadrupleReport rep;
        rep.first = pairs[i];
        rep.second = pairs[j];
        rep.sum = sum;
        const std::set<Word> four{pairs[i][0], pairs[i][1], pairs[j][0], pairs[j][1]};
        std::set<Label> candidates;
        for (const Word& w : four) candidates.insert(named[w].begin(), named[w].end());
        for (auto a = candidates.begin(); a != candidates.end() && !rep.certified; ++a) {
          for (auto b = std::next(a); b != candidates.end() && !rep.certified; ++b) {
            const Word& rho = p.rho(*a, *b);
            const std::set<Word> expected{p.eta.at(*a), p.eta.at(*b), p.eta.at(*a) + rho, p.eta.at(*b) + rho};
            if (expected == four) rep.certified = assign_shape(p, rep, *a, *b);
          }
        }
        out.push_back(std::move(rep));
      }
    }
  }
  return out;
}

}  // namespace knaster
