#include "doctest.h"
#include "fixtures.hpp"

#include "knaster/gf2.hpp"
#include "knaster/word.hpp"

#include <random>

using namespace knaster;
using knaster::testing::W;

TEST_SUITE("gf2core") {
  TEST_CASE("add") {
    CHECK(add(W("0110"), W("0011")) == W("0101"));
    CHECK(add(W("10110"), W("10110")).is_zero());
    const Word mid = add(W("10110"), W("01101"));
    CHECK(mid == W("11011"));
    CHECK(add(mid, W("01101")) == W("10110"));
    CHECK_THROWS_AS(add(W("01"), W("011")), std::invalid_argument);
  }

  TEST_CASE("lex_less") {
    CHECK(lex_less(W("001"), W("010")));
    CHECK_FALSE(lex_less(W("110"), W("110")));
    CHECK_FALSE(lex_less(W("111"), W("011")));
    CHECK_THROWS_AS(lex_less(W("1"), W("10")), std::invalid_argument);
  }

  TEST_CASE("first_diff") {
    CHECK(first_diff(W("0011"), W("0101")) == 1U);
    CHECK_FALSE(first_diff(W("0101"), W("0101")).has_value());
    CHECK(first_diff(W("1000"), W("0000")) == 0U);
    CHECK_THROWS_AS(first_diff(W("0"), W("00")), std::invalid_argument);
  }

  TEST_CASE("pad and restrict") {
    CHECK(pad_zeros(W("11"), 2) == W("1100"));
    CHECK(restrict(W("1100"), 2) == W("11"));
    CHECK(restrict(W("10101"), 5) == W("10101"));
    CHECK_THROWS_AS(restrict(W("10"), 3), std::out_of_range);
    CHECK(W("1") != W("10"));
  }

  TEST_CASE("words longer than one block") {
    Word w = Word::unit(130, 129);
    CHECK(w.block_count() == 3);
    CHECK(w.restrict(129).is_zero());
    CHECK(first_diff(w, Word::zero(130)) == 129U);
    CHECK(Word::parse(w.to_string()) == w);
    CHECK(w.pad_zeros(10).restrict(130) == w);
    CHECK(lex_less(Word::unit(130, 100), Word::unit(130, 64)));
  }

  TEST_CASE("lex index matches lex order") {
    for (std::uint64_t i = 0; i + 1 < 64; ++i) {
      const Word a = Word::from_lex_index(i, 6);
      CHECK(a.lex_index() == i);
      CHECK(lex_less(a, Word::from_lex_index(i + 1, 6)));
    }
    CHECK(Word::from_lex_index(1, 4) == W("0001"));
  }

  TEST_CASE("text encoding round-trips" * doctest::description("property")) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = knaster::testing::random_word(rng, rng() % 200);
      CHECK(Word::parse(w.to_string()).to_string() == w.to_string());
    }
    CHECK_THROWS_AS(Word::parse("01x"), std::invalid_argument);
  }

  TEST_CASE("algebraic laws" * doctest::description("property")) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t len = 1 + rng() % 100;
      const Word a = knaster::testing::random_word(rng, len);
      const Word b = knaster::testing::random_word(rng, len);
      const Word c = knaster::testing::random_word(rng, len);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + Word::zero(len) == a);
      CHECK((a + a).is_zero());
      // strict total order
      CHECK(lex_less(a, b) + lex_less(b, a) + (a == b) == 1);
      if (lex_less(a, b) && lex_less(b, c)) CHECK(lex_less(a, c));
      CHECK(first_diff(a, b) == first_diff(b, a));
      if (auto k = first_diff(a, b)) {
        CHECK(restrict(a, *k) == restrict(b, *k));
        CHECK(a[*k] != b[*k]);
        CHECK(lex_less(a, b) == !a[*k]);
      }
      const std::size_t pad = rng() % 70;
      CHECK(restrict(pad_zeros(a, pad), len) == a);
    }
  }

  TEST_CASE("rank") {
    const std::vector<Word> basis{W("100"), W("010"), W("001")};
    CHECK(rank(basis) == 3);
    CHECK(is_independent(basis));
    const std::vector<Word> cycle{W("110"), W("011"), W("101")};
    CHECK(rank(cycle) == 2);
    CHECK_FALSE(is_independent(cycle));
    const std::vector<Word> amalgam{W("100000"), W("010000"), W("010100"), W("001000"), W("001010"), W("000001")};
    CHECK(rank(amalgam) == 6);
    CHECK(is_independent(amalgam));
    CHECK(rank(std::vector<Word>{}) == 0);
    CHECK(is_independent(std::vector<Word>{}));
    CHECK_THROWS_AS(rank(std::vector<Word>{W("10"), W("100")}), std::invalid_argument);
  }

  TEST_CASE("express_in_basis") {
    const std::vector<Word> basis{W("100"), W("010"), W("001")};
    CHECK(express_in_basis(W("110"), basis) == std::vector<std::size_t>{0, 1});
    CHECK(express_in_basis(W("000"), basis) == std::vector<std::size_t>{});
    CHECK_FALSE(express_in_basis(W("111"), std::vector<Word>{W("100"), W("010")}).has_value());
    CHECK_THROWS_AS(express_in_basis(W("110"), std::vector<Word>{W("110"), W("011"), W("101")}),
                    std::invalid_argument);
  }

  TEST_CASE("independence agrees with the subset-XOR oracle" * doctest::description("property")) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t len = 1 + rng() % 14;
      const std::size_t count = rng() % 11;
      std::vector<Word> ws;
      for (std::size_t i = 0; i < count; ++i) ws.push_back(knaster::testing::random_word(rng, len));
      CHECK(is_independent(ws) == knaster::testing::independent_by_subsets(ws));
    }
  }

  TEST_CASE("express_in_basis round-trips" * doctest::description("property")) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t len = 4 + rng() % 120;
      std::vector<Word> basis;
      Gf2Eliminator elim(len);
      while (basis.size() < std::min<std::size_t>(len, 1 + rng() % 12)) {
        Word w = knaster::testing::random_word(rng, len);
        if (elim.insert(w)) basis.push_back(w);
      }
      const Word target = knaster::testing::random_word(rng, len);
      if (auto support = express_in_basis(target, basis)) {
        Word sum = Word::zero(len);
        for (std::size_t i : *support) sum += basis[i];
        CHECK(sum == target);
      } else {
        std::vector<Word> extended = basis;
        extended.push_back(target);
        CHECK(is_independent(extended));
      }
    }
  }
}
