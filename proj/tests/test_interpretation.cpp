#include <doctest.h>

#include <random>

#include "alcor/cost.hpp"
#include "alcor/interpretation.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace alcor;

TEST_CASE("interpretation counts") {
  CHECK(interpretation_count(Vocabulary({"A", "B", "C"}, {}, {"a"})) == 8);
  CHECK(interpretation_count(Vocabulary({"A"}, {"r"}, {"a", "b"})) == 64);
  CHECK(interpretation_count(Vocabulary({}, {}, {"a"})) == 1);
}

TEST_CASE("bit budget is enforced") {
  const Vocabulary big({"A", "B", "C", "D"}, {"r"}, {"a", "b", "c"});  // 12 + 9 = 21 bits
  CHECK(interpretation_count(big, 21) == (1u << 21));
  CHECK_THROWS_AS(interpretation_count(big, 20), SizeLimitError);
}

TEST_CASE("decode endpoints and bijection") {
  const Vocabulary v({"A"}, {"r"}, {"a", "b"});
  const auto empty = decode(v, 0);
  CHECK(extension(empty, ConceptExpr::atom("A")) == 0);
  CHECK(empty.role_successors(0, 0) == 0);

  const std::uint64_t full_ix = interpretation_count(v) - 1;
  const auto full = decode(v, full_ix);
  CHECK(extension(full, ConceptExpr::atom("A")) == universe_mask(v));
  CHECK(full.role_successors(0, 1) == universe_mask(v));

  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t ix = rng() % interpretation_count(v);
    CHECK(encode(decode(v, ix)) == ix);
  }
  CHECK_THROWS_AS(decode(v, interpretation_count(v)), ContractError);
}

TEST_CASE("extension basics from the triangle worlds") {
  const auto kb = fixtures::penguin();
  const auto L = ConceptExpr::atom("Logician");
  const auto E = ConceptExpr::atom("Experiments");
  // world {L, S, E}: index 0b111
  const Interpretation world(kb.vocab, 0b111);
  CHECK(extension(world, ConceptExpr::conjunction(L, ConceptExpr::negation(E))) == 0);
  CHECK(extension(world, ConceptExpr::top()) == universe_mask(kb.vocab));
}

TEST_CASE("vacuous universal over an empty role") {
  const Vocabulary v({"A"}, {"r"}, {"a", "b"});
  const Interpretation i(v, 0b01);  // A = {a}, r empty
  CHECK(extension(i, ConceptExpr::forall("r", ConceptExpr::atom("A"))) == universe_mask(v));
}

TEST_CASE("statement satisfaction") {
  const Vocabulary v({"L", "S"}, {}, {"N"});
  const auto L = ConceptExpr::atom("L");
  const auto S = ConceptExpr::atom("S");
  const Interpretation both(v, 0b11);
  const Interpretation only_l(v, 0b01);
  CHECK(satisfies(both, Gci{L, S}));
  CHECK(!satisfies(only_l, ConceptAssertion{"N", S}));
  CHECK(satisfies(only_l, Gci{ConceptExpr::bot(), S}));
  CHECK(satisfies(both, Statement(Gci{ConceptExpr::bot(), L})));
  CHECK_THROWS_AS(satisfies(both, Statement(Dci{L, S})), ContractError);
}

TEST_CASE("negation and quantifier dualities on random inputs") {
  testgen::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Vocabulary v = testgen::random_vocab(rng);
    const std::uint64_t n = interpretation_count(v);
    const ConceptExpr c = testgen::random_concept(rng, v, 2);
    const Interpretation i(v, rng() % n);
    CHECK(extension(i, ConceptExpr::negation(c)) ==
          (universe_mask(v) & ~extension(i, c)));
    if (v.role_count() > 0) {
      const std::string r = v.role_names()[0];
      const ConceptExpr fa = ConceptExpr::forall(r, c);
      const ConceptExpr dual = ConceptExpr::negation(
          ConceptExpr::exists(r, ConceptExpr::negation(c)));
      CHECK(extension(i, fa) == extension(i, dual));
    }
    // subset test versus empty violator set
    const ConceptExpr d = testgen::random_concept(rng, v, 2);
    const bool subset = satisfies(i, Gci{c, d});
    CHECK(subset == (extension(i, ConceptExpr::conjunction(c, ConceptExpr::negation(d))) == 0));
  }
}

TEST_CASE("extensions match the naive oracle on every world") {
  const Vocabulary v({"A"}, {"r"}, {"a", "b"});
  testgen::Rng rng(13);
  std::vector<ConceptExpr> concepts;
  for (int i = 0; i < 12; ++i) concepts.push_back(testgen::random_concept(rng, v, 3));
  for (const auto& world : oracle::enumerate_interpretations(v)) {
    const Interpretation engine_world(v, oracle::encode_bits(v, world));
    for (const auto& c : concepts) {
      const auto expected = oracle::extension(v, world, c);
      const auto names = extension_names(engine_world, c);
      CHECK(std::set<std::string>(names.begin(), names.end()) == expected);
    }
  }
}

TEST_CASE("world literals round trip") {
  const Vocabulary v({"L"}, {"r"}, {"N", "M"});
  const Interpretation i = from_literal(R"({"concepts":{"L":["N"]},"roles":{"r":[["N","M"]]}})", v);
  CHECK(i.concept_member(0, 0));
  CHECK(!i.concept_member(0, 1));
  CHECK(i.role_member(0, 0, 1));
  const Interpretation back = from_literal(to_literal(i), v);
  CHECK(back.bits() == i.bits());
  CHECK_THROWS_AS(from_literal(R"({"concepts":{"X":[]}})", v), ValidationError);
  CHECK_THROWS_AS(from_literal("not json", v), ValidationError);
}
