#include "doctest.h"
#include "fixtures.hpp"

#include "knaster/serialize.hpp"

#include <random>

using namespace knaster;
using knaster::testing::W;

namespace {

const char* const kWorkedPair = R"({
  "u": [
    5,
    9
  ],
  "n": 3,
  "m_star": 3,
  "eta": {
    "5": "100",
    "9": "010"
  },
  "trees": [
    [
      "100"
    ],
    [
      "011",
      "101"
    ],
    [
      "010"
    ]
  ],
  "mu": [
    {
      "pair": [
        5,
        9
      ],
      "rho": "001",
      "ell": 1
    }
  ],
  "K": {
    "5": 0,
    "9": 2
  }
}
)";

std::string message_of(std::string_view text) {
  try {
    parse_condition(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("canonical condition text") {
    CHECK(print_condition(knaster::testing::worked_pair()) == kWorkedPair);
    CHECK(parse_condition(kWorkedPair) == knaster::testing::worked_pair());
  }

  TEST_CASE("parse errors name their location") {
    const std::string syntax = message_of("{\n  \"u\": [5,\n");
    CHECK(syntax.find("line") != std::string::npos);
    CHECK(message_of(R"({"u":[5],"n":1,"m_star":1,"eta":{"5":"1"},"trees":[["1"]],"mu":[],"K":{"5":"x"}})")
              .find("/K/5") != std::string::npos);
    CHECK(message_of(R"({"u":[5],"n":1,"m_star":1,"eta":{"05":"1"},"trees":[["1"]],"mu":[],"K":{"5":0}})")
              .find("/eta/05") != std::string::npos);
    CHECK(message_of(R"({"u":[5],"n":1,"m_star":1,"eta":{"5":"12"},"trees":[["1"]],"mu":[],"K":{"5":0}})")
              .find("/eta/5") != std::string::npos);
    CHECK(message_of(R"({"u":[5],"n":1,"m_star":1,"eta":{"5":"1"},"trees":[["1","1"]],"mu":[],"K":{"5":0}})")
              .find("/trees/0") != std::string::npos);
    CHECK(message_of(R"({"u":[5],"n":1,"m_star":1,"eta":{"5":"1"},"trees":[["1"]],"mu":[],"K":{"5":0},"x":1})")
              .find("unexpected field") != std::string::npos);
    CHECK(message_of(R"({"u":[5],"n":1,"eta":{"5":"1"},"trees":[["1"]],"mu":[],"K":{"5":0}})")
              .find("m_star") != std::string::npos);
    CHECK(message_of(R"({"u":[5,9],"n":1,"m_star":1,"eta":{},"trees":[],"mu":[{"pair":[9,5],"rho":"1","ell":0}],"K":{}})")
              .find("/mu/0/pair") != std::string::npos);
    CHECK_THROWS_AS(parse_chain(R"({"stages":[]})"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"members":[],"arrangement":["00"],"origin":"staged"})"), ParseError);
  }

  TEST_CASE("parsing does not validate") {
    // Clause violations are the validator's business, not the parser's.
    Condition bad = knaster::testing::worked_pair();
    bad.K[9] = 0;
    const Condition back = parse_condition(print_condition(bad));
    CHECK(back == bad);
    CHECK_FALSE(is_valid(back));
  }

  TEST_CASE("chains and certificates round-trip") {
    const Chain c = build_chain({2, 7, 11}, 25, 9);
    const std::string text = print_chain(c);
    CHECK(parse_chain(text) == c);
    CHECK(print_chain(parse_chain(text)) == text);

    const auto cert = extract_homogeneous(gen_star_coloring(16, ColoringStrategy::Matching, 0));
    const std::string ctext = print_certificate(cert);
    const auto back = parse_certificate(ctext);
    CHECK(back == cert);
    CHECK(back.origin == cert.origin);
    CHECK(print_certificate(back) == ctext);
  }

  TEST_CASE("round-trips are bit-exact" * doctest::description("property")) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
      const Chain c = build_chain({static_cast<Label>(rng() % 10), static_cast<Label>(10 + rng() % 10)},
                                  1 + rng() % 60, rng());
      const Condition& p = c.stages.back();
      const std::string text = print_condition(p);
      const Condition back = parse_condition(text);
      CHECK(back == p);
      CHECK(print_condition(back) == text);
    }
  }
}
