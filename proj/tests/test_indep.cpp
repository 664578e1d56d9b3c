#include "doctest.h"
#include "fixtures.hpp"

#include "knaster/gf2.hpp"
#include "knaster/indep.hpp"

#include <algorithm>
#include <random>

using namespace knaster;
using knaster::testing::W;

namespace {

std::vector<Word> standard_basis(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Word::unit(n, i));
  return out;
}

std::vector<Word> translate(std::vector<Word> ws, const Word& x) {
  for (Word& w : ws) w += x;
  return ws;
}

// A random instance of the translation problem, as in the randomized suite.
struct Instance {
  std::vector<Word> A, B;
  Word x;
};

Instance random_instance(std::mt19937_64& rng) {
  const std::size_t n = 6 + rng() % 19;
  const std::size_t size = 5 + rng() % 8;
  Instance inst;
  Gf2Eliminator elim(n);
  while (inst.B.size() < std::min(size, n)) {
    Word w = knaster::testing::random_word(rng, n);
    if (elim.insert(w)) inst.B.push_back(w);
  }
  inst.x = knaster::testing::random_word(rng, n);
  std::vector<Word> pool = inst.B;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(5 + rng() % (pool.size() - 4));
  inst.A = translate(pool, inst.x);
  return inst;
}

}  // namespace

TEST_SUITE("indep") {
  TEST_CASE("decompose_shared") {
    const auto B = standard_basis(5);
    const auto d = decompose_shared(W("00000"), W("11000"), W("10100"), B);
    CHECK(d.eta == B[0]);
    CHECK(d.nu == B[1]);
    CHECK(d.rho == B[2]);
    const auto e = decompose_shared(B[0], B[1], B[2], B);
    CHECK(e.eta == B[0]);
    CHECK(e.nu == B[1]);
    CHECK(e.rho == B[2]);
  }

  TEST_CASE("decompose_shared rejects broken preconditions") {
    const auto B = standard_basis(5);
    // a+b = e0+e1 and a+c = e2+e3: disjoint supports
    CHECK_THROWS_AS(decompose_shared(W("00000"), W("11000"), W("00110"), B), std::invalid_argument);
    // a+b has support of size 3
    CHECK_THROWS_AS(decompose_shared(W("00000"), W("11100"), W("10010"), B), std::invalid_argument);
    // a+b outside the span
    const std::vector<Word> short_basis(B.begin(), B.begin() + 2);
    CHECK_THROWS_AS(decompose_shared(W("00000"), W("11000"), W("10100"), short_basis), std::invalid_argument);
  }

  TEST_CASE("recover_translation") {
    const auto B5 = standard_basis(5);
    CHECK(recover_translation(B5, B5) == W("00000"));
    const auto B7 = standard_basis(7);
    CHECK(recover_translation(std::vector<Word>(B7.begin() + 1, B7.begin() + 6), B7) == Word::zero(7));
    CHECK(recover_translation(translate(B5, W("11111")), B5) == W("11111"));
    const auto B6 = standard_basis(6);
    const std::vector<Word> five{B6[0], B6[2], B6[3], B6[4], B6[5]};
    CHECK(recover_translation(translate(five, W("101010")), B6) == W("101010"));
    CHECK(brute_translation(translate(five, W("101010")), B6) == std::vector<Word>{W("101010")});
    CHECK(brute_translation(translate(B5, W("11111")), B5, TranslationScan::Full) == std::vector<Word>{W("11111")});
  }

  TEST_CASE("recover_translation rejects") {
    const auto B5 = standard_basis(5);
    CHECK_THROWS_AS(recover_translation(std::vector<Word>(B5.begin(), B5.begin() + 4), B5), std::invalid_argument);
    // A + A escapes B + B
    std::vector<Word> A(B5.begin(), B5.begin() + 4);
    A.push_back(W("11100"));
    CHECK_THROWS_AS(recover_translation(A, B5), std::invalid_argument);
    std::vector<Word> dependent = B5;
    dependent.push_back(W("11000"));
    CHECK_THROWS_AS(recover_translation(B5, dependent), std::invalid_argument);
  }

  TEST_CASE("two-element sets have two translations") {
    const auto B = standard_basis(3);
    const std::vector<Word> A{W("100"), W("010")};
    CHECK(brute_translation(A, B, TranslationScan::Full) == std::vector<Word>{W("000"), W("110")});
    CHECK(brute_translation(A, B) == std::vector<Word>{W("000"), W("110")});
  }

  TEST_CASE("decompose_shared equations hold" * doctest::description("property")) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
      const Instance inst = random_instance(rng);
      std::vector<Word> A = inst.A;
      std::sort(A.begin(), A.end(), lex_less);
      const auto d = decompose_shared(A[0], A[1], A[2], inst.B);
      CHECK(A[0] + A[1] == d.eta + d.nu);
      CHECK(A[0] + A[2] == d.eta + d.rho);
      CHECK(d.eta != d.nu);
      CHECK(d.eta != d.rho);
      CHECK(d.nu != d.rho);
      for (const Word* w : {&d.eta, &d.nu, &d.rho}) CHECK(std::find(inst.B.begin(), inst.B.end(), *w) != inst.B.end());
    }
  }

  TEST_CASE("recovered translation is the unique one" * doctest::description("property")) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
      const Instance inst = random_instance(rng);
      const Word x = recover_translation(inst.A, inst.B);
      CHECK(x == inst.x);
      CHECK(brute_translation(inst.A, inst.B) == std::vector<Word>{x});
    }
  }

  TEST_CASE("candidate scan matches the full scan" * doctest::description("property")) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 3 + rng() % 9;
      std::vector<Word> B;
      Gf2Eliminator elim(n);
      const std::size_t size = n - rng() % 2;
      while (B.size() < size) {
        Word w = knaster::testing::random_word(rng, n);
        if (elim.insert(w)) B.push_back(w);
      }
      std::vector<Word> A;
      for (std::size_t i = 0; i < 1 + rng() % 3; ++i) A.push_back(knaster::testing::random_word(rng, n));
      if (rng() & 1U) A = translate({B[0], B[1]}, knaster::testing::random_word(rng, n));
      CHECK(brute_translation(A, B) == brute_translation(A, B, TranslationScan::Full));
    }
  }
}
