#include "doctest.h"
#include "fixtures.hpp"

#include "knaster/chainlab.hpp"

#include <algorithm>
#include <random>

using namespace knaster;
using knaster::testing::W;

namespace {

// Every pair of distinct leaves of the invalid condition below holds all
// eta and eta + rho words; only clause 9 fails (rho_23 = rho_12 + rho_13).
Condition dependent_rhos() {
  Condition p;
  p.u = {1, 2, 3};
  p.n = 5;
  const Word e0 = Word::unit(5, 0), e1 = Word::unit(5, 1), e2 = Word::unit(5, 2), e3 = Word::unit(5, 3),
             e4 = Word::unit(5, 4);
  p.eta = {{1, e0}, {2, e1}, {3, e2}};
  p.mu = {{LabelPair{1, 2}, PairData{e3, 1}}, {LabelPair{1, 3}, PairData{e4, 2}}, {LabelPair{2, 3}, PairData{e3 + e4, 3}}};
  p.trees = {FiniteTree(5, {e0, e1, e2}), FiniteTree(5, {e0 + e3, e1 + e3}), FiniteTree(5, {e0 + e4, e2 + e4}),
             FiniteTree(5, {e1 + e3 + e4, e2 + e3 + e4})};
  p.m_star = 4;
  p.K = {{1, 0}, {2, 0}, {3, 0}};
  return p;
}

}  // namespace

TEST_SUITE("chainlab") {
  TEST_CASE("build_chain") {
    const Chain c = build_chain({5, 9}, 3, 0);
    REQUIRE(c.stages.size() == 2);
    CHECK(c.stages[0] == minimal_condition(5));
    CHECK(c.stages[1] == knaster::testing::worked_pair());
    CHECK(build_chain({0}, 1, 4).stages.size() == 1);
    CHECK_THROWS_AS(build_chain({}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_chain({3, 3}, 1, 0), std::invalid_argument);

    const Chain big = build_chain({2, 4, 6, 8}, 30, 17);
    CHECK(chain_violations(big).empty());
    CHECK(big.stages.back().n >= 30);
    for (Label a : {2, 4, 6, 8}) CHECK(big.stages.back().has_label(a));
    CHECK(build_chain({2, 4, 6, 8}, 30, 17) == big);
  }

  TEST_CASE("seed only moves scratch labels") {
    std::set<std::vector<Label>> orders;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Chain c = build_chain({10, 3, 7}, 40, seed);
      CHECK(chain_violations(c).empty());
      std::vector<Label> added;
      for (std::size_t i = 1; i < c.stages.size(); ++i) {
        for (Label a : c.stages[i].u)
          if (!c.stages[i - 1].has_label(a)) added.push_back(a);
      }
      std::vector<Label> given;
      std::copy_if(added.begin(), added.end(), std::back_inserter(given), [](Label a) { return a <= 10; });
      CHECK(given == std::vector<Label>{3, 7});
      orders.insert(added);
    }
    CHECK(orders.size() > 1);
  }

  TEST_CASE("chain_violations catches a broken chain") {
    Chain c = build_chain({5, 9}, 3, 0);
    c.stages.push_back(minimal_condition(5));
    CHECK_FALSE(chain_violations(c).empty());
  }

  TEST_CASE("approximation") {
    const auto rep = approximation(build_chain({5, 9}, 3, 0));
    CHECK(rep.stability_violations.empty());
    CHECK(rep.approx.n == 3);
    CHECK(rep.approx.h.at(5) == W("100"));
    CHECK(rep.approx.h.at(9) == W("010"));
    CHECK(rep.approx.r.at(LabelPair{5, 9}) == W("001"));
    CHECK(rep.approx.T == std::vector<std::set<Word>>{{W("100")}, {W("101"), W("011")}, {W("010")}});

    const Condition single = knaster::testing::worked_amalgam();
    const auto snap = approximation(Chain{{single}});
    CHECK(snap.approx.n == single.n);
    CHECK(snap.approx.h == single.eta);
    for (std::size_t m = 0; m < single.trees.size(); ++m) CHECK(snap.approx.T[m] == single.trees[m].leaves());
  }

  TEST_CASE("intersection_witnesses") {
    const auto g = approximation(build_chain({5, 9}, 3, 0)).approx;
    const auto rep = intersection_witnesses(g, 5, 9);
    CHECK(rep.violations.empty());
    REQUIRE(rep.witnesses.size() == 4);
    std::vector<Word> values;
    for (const Witness& w : rep.witnesses) {
      values.push_back(w.value);
      CHECK(g.h.at(5) + w.alpha_leaf == w.value);
      CHECK(g.h.at(9) + w.beta_leaf == w.value);
      CHECK(g.T[w.alpha_tree].count(w.alpha_leaf) == 1);
      CHECK(g.T[w.beta_tree].count(w.beta_leaf) == 1);
    }
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<Word>{W("000"), W("001"), W("110"), W("111")});
    CHECK_THROWS_AS(intersection_witnesses(g, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(intersection_witnesses(g, 5, 6), std::invalid_argument);
  }

  TEST_CASE("witnesses restrict along the chain") {
    const Chain c = build_chain({5, 9, 20}, 25, 3);
    const auto first = std::find_if(c.stages.begin(), c.stages.end(), [](const Condition& p) { return p.has_label(9); });
    REQUIRE(first != c.stages.end());
    REQUIRE(first + 1 != c.stages.end());
    const auto early = intersection_witnesses(approximation(Chain{{*first}}).approx, 5, 9);
    const auto late = intersection_witnesses(approximation(c).approx, 5, 9);
    REQUIRE(early.witnesses.size() == 4);
    REQUIRE(late.witnesses.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(late.witnesses[i].value.restrict(first->n) == early.witnesses[i].value);
  }

  TEST_CASE("classify_sum") {
    const Condition p = knaster::testing::worked_pair();
    const auto a = classify_sum(p, W("110"));
    CHECK(a.kind == SumClass::Kind::TypeA);
    CHECK(a.alpha == 5);
    CHECK(a.beta == 9);
    CHECK(a.color() == 1);
    CHECK(classify_sum(p, W("001")).kind == SumClass::Kind::TypeC);
    CHECK(classify_sum(p, W("111")).kind == SumClass::Kind::TypeB);
    CHECK(classify_sum(p, W("111")).color() == 0);
    CHECK(classify_sum(p, W("100")).kind == SumClass::Kind::Other);
    CHECK(classify_sum(p, W("000")).color() == -1);
    CHECK_THROWS_AS(classify_sum(p, W("11")), std::invalid_argument);
  }

  TEST_CASE("triangle_scan") {
    const auto pair = triangle_scan(knaster::testing::worked_pair());
    CHECK(pair.pass);
    CHECK(pair.color_zero_sums == 2);
    CHECK(triangle_scan(knaster::testing::worked_amalgam()).pass);

    const Condition bad = dependent_rhos();
    const auto violations = validate(bad);
    REQUIRE(violations.size() == 1);
    CHECK(violations.front().clause == 9);
    const auto rep = triangle_scan(bad);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.counterexample.has_value());
    const auto& [s, t, sum] = *rep.counterexample;
    CHECK(s + t == sum);
    for (const Word& w : *rep.counterexample) CHECK(classify_sum(bad, w).color() == 0);
  }

  TEST_CASE("chains satisfy the finite claims" * doctest::description("property")) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
      std::set<Label> pool;
      const std::size_t size = 1 + rng() % 4;
      while (pool.size() < size) pool.insert(static_cast<Label>(rng() % 30));
      std::vector<Label> labels(pool.begin(), pool.end());
      std::shuffle(labels.begin(), labels.end(), rng);
      const Chain c = build_chain(labels, 1 + rng() % 40, rng());
      CHECK(chain_violations(c).empty());
      const auto rep = approximation(c);
      CHECK(rep.stability_violations.empty());
      const Condition& last = c.stages.back();
      for (std::size_t i = 0; i < last.u.size(); ++i) {
        for (std::size_t j = i + 1; j < last.u.size(); ++j) {
          const auto w = intersection_witnesses(rep.approx, last.u[i], last.u[j]);
          CHECK(w.violations.empty());
          CHECK(w.witnesses.size() == 4);
        }
      }
      CHECK(triangle_scan(last).pass);
    }
  }

  TEST_CASE("sum classes match quadruple shapes" * doctest::description("property")) {
    std::vector<Condition> conditions{knaster::testing::worked_pair(), knaster::testing::worked_amalgam()};
    for (std::uint64_t seed = 0; seed < 4; ++seed) conditions.push_back(build_chain({1, 4, 9}, 20, seed).stages.back());
    for (const Condition& p : conditions) {
      for (const auto& rep : scan_equal_sums(p)) {
        REQUIRE(rep.certified);
        const SumClass cls = classify_sum(p, rep.sum);
        const SumClass::Kind expected = rep.shape == PairShape::EtaEta     ? SumClass::Kind::TypeA
                                        : rep.shape == PairShape::CrossRho ? SumClass::Kind::TypeB
                                                                           : SumClass::Kind::TypeC;
        CHECK(cls.kind == expected);
        CHECK(LabelPair::of(cls.alpha, cls.beta) == LabelPair::of(rep.alpha, rep.beta));
      }
    }
  }
}
