#include <doctest.h>

#include "alcor/crep.hpp"
#include "alcor/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace alcor;

namespace {

// Triangle worlds: Logician = bit 0, Scientist = bit 1, Experiments = bit 2.
const std::vector<std::uint64_t> kPenguinEta{1, 2, 3};

}  // namespace

TEST_CASE("raw penalties on the triangle") {
  const DefeasibleKb kb = fixtures::penguin();
  CHECK(raw_penalty(kb, kPenguinEta, Interpretation(kb.vocab, 0b111)) == 2);
  CHECK(raw_penalty(kb, kPenguinEta, Interpretation(kb.vocab, 0b001)) == 1);
  CHECK(raw_penalty(kb, kPenguinEta, Interpretation(kb.vocab, 0b101)) == 3);
  // worlds violating the ABox are out of contract
  CHECK_THROWS_AS(raw_penalty(kb, kPenguinEta, Interpretation(kb.vocab, 0b000)), ContractError);
}

TEST_CASE("normalization constants") {
  const DefeasibleKb kb = fixtures::penguin();
  CHECK(normalization_constant(kb, kPenguinEta) == -1);

  const DefeasibleKb single = fixtures::single_dci();
  CHECK(normalization_constant(single, std::vector<std::uint64_t>{1}) == 0);

  const auto empty_dbox = std::get<DefeasibleKb>(
      parse_document("vocab { concepts: A; roles: ; individuals: a; } dbox { }"));
  CHECK(normalization_constant(empty_dbox, {}) == 0);

  const auto unsat = std::get<DefeasibleKb>(parse_document(
      "vocab { concepts: A; roles: ; individuals: a; } tbox { top <= bot; } dbox { }"));
  CHECK_THROWS_AS(normalization_constant(unsat, {}), UnsatisfiableStrictPartError);
}

TEST_CASE("building the triangle candidate") {
  const DefeasibleKb kb = fixtures::penguin();
  const CRepresentation crep = build(kb, kPenguinEta, -1);
  CHECK(crep.kappa0() == -1);
  CHECK(crep.ranking() == fixtures::kappa_star());
  // a wrong kappa0 is rejected
  CHECK_THROWS_AS(build(kb, kPenguinEta, 0), ValidationError);
  // eta entries must be positive unless overridden
  CHECK_THROWS_AS(build(kb, {1, 0, 3}), ValidationError);
  CHECK(build(kb, {1, 0, 3}, std::nullopt, SatisfactionMode::Strict, kDefaultBitBudget, true)
            .kappa0() == 0);
}

TEST_CASE("empty DBox builds a two-level ranking") {
  const auto kb = std::get<DefeasibleKb>(parse_document(
      "vocab { concepts: A; roles: ; individuals: a; } tbox { A <= bot; } dbox { }"));
  const CRepresentation crep = build(kb, {});
  CHECK(crep.kappa0() == 0);
  CHECK(crep.ranking().rank(std::uint64_t{0}) == ExtendedNat(0));
  CHECK(crep.ranking().rank(std::uint64_t{1}).is_infinite());
}

TEST_CASE("c-representation checks") {
  CHECK(!is_c_representation(fixtures::penguin(), kPenguinEta, -1, SatisfactionMode::Strict));
  CHECK(is_c_representation(fixtures::single_dci(), std::vector<std::uint64_t>{1}, 0,
                            SatisfactionMode::Strict));
  const auto empty_dbox = std::get<DefeasibleKb>(
      parse_document("vocab { concepts: A; roles: ; individuals: a; } dbox { }"));
  CHECK(is_c_representation(empty_dbox, {}, 0, SatisfactionMode::Strict));
}

TEST_CASE("kappa entailment on the triangle candidate") {
  const CRepresentation crep = build(fixtures::penguin(), kPenguinEta);
  const Vocabulary& v = crep.kb().vocab;
  CHECK(kappa_entails(crep, parse_statement("N : !Scientist", v)));
  CHECK(kappa_entails(crep, parse_statement("Logician ~< !Experiments", v)));
  CHECK(kappa_entails(crep, parse_statement("top <= top", v)));
  CHECK(!kappa_entails(crep, parse_statement("Logician ~< Scientist", v)));
}

TEST_CASE("bounded search") {
  CHECK(find_c_representations(fixtures::penguin(), {5, SatisfactionMode::Strict}).empty());

  const auto found = find_c_representations(fixtures::single_dci(), {2, SatisfactionMode::Strict});
  REQUIRE(found.size() == 2);
  CHECK(found[0].eta == std::vector<std::uint64_t>{1});
  CHECK(found[0].kappa0 == 0);
  CHECK(found[1].eta == std::vector<std::uint64_t>{2});
  CHECK(found[1].kappa0 == 0);

  const auto empty_dbox = std::get<DefeasibleKb>(
      parse_document("vocab { concepts: A; roles: ; individuals: a; } dbox { }"));
  const auto trivial = find_c_representations(empty_dbox, {8, SatisfactionMode::Strict});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].eta.empty());
  CHECK(trivial[0].kappa0 == 0);
}

TEST_CASE("search results are exactly the valid assignments") {
  testgen::Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    DefeasibleKb kb = testgen::random_dkb(rng, {.max_dbox = 2});
    const SearchBudget budget{3, SatisfactionMode::Strict};
    std::vector<EtaAssignment> found;
    try {
      found = find_c_representations(kb, budget);
    } catch (const UnsatisfiableStrictPartError&) {
      continue;
    }
    // independent rescan of the whole box
    const std::size_t n = kb.dbox.size();
    std::vector<std::uint64_t> eta(n, 1);
    std::vector<std::vector<std::uint64_t>> expected;
    for (;;) {
      if (is_c_representation(kb, eta, std::nullopt, budget.mode)) expected.push_back(eta);
      std::size_t pos = n;
      while (pos > 0) {
        if (eta[pos - 1] < budget.eta_max) {
          ++eta[pos - 1];
          break;
        }
        eta[pos - 1] = 1;
        --pos;
      }
      if (pos == 0) break;
    }
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].eta == expected[i]);
  }
}

TEST_CASE("uniform scaling preserves the order of finite ranks") {
  testgen::Rng rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const DefeasibleKb kb = testgen::random_dkb(rng, {.max_dbox = 2});
    std::vector<std::uint64_t> eta(kb.dbox.size());
    for (auto& e : eta) e = 1 + rng() % 3;
    std::vector<std::uint64_t> scaled = eta;
    const std::uint64_t factor = 2 + rng() % 3;
    for (auto& e : scaled) e *= factor;
    try {
      const CRepresentation a = build(kb, eta);
      const CRepresentation b = build(kb, scaled);
      for (std::uint64_t i = 0; i < a.ranking().size(); ++i) {
        CHECK(a.ranking().rank(i).is_finite() == b.ranking().rank(i).is_finite());
        CHECK((a.ranking().rank(i) == ExtendedNat(0)) == (b.ranking().rank(i) == ExtendedNat(0)));
        for (std::uint64_t j = 0; j < a.ranking().size(); ++j) {
          if (!a.ranking().rank(i).is_finite() || !a.ranking().rank(j).is_finite()) continue;
          CHECK((a.ranking().rank(i) < a.ranking().rank(j)) ==
                (b.ranking().rank(i) < b.ranking().rank(j)));
        }
      }
    } catch (const UnsatisfiableStrictPartError&) {
      continue;
    }
  }
}

TEST_CASE("the built table is the penalty sum shifted by kappa0") {
  testgen::Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const DefeasibleKb kb = testgen::random_dkb(rng);
    std::vector<std::uint64_t> eta(kb.dbox.size());
    for (auto& e : eta) e = 1 + rng() % 3;
    try {
      const CRepresentation crep = build(kb, eta);
      for (std::uint64_t ix = 0; ix < crep.ranking().size(); ++ix) {
        const Interpretation world(kb.vocab, ix);
        if (!satisfies_strict_part(world, kb)) {
          CHECK(crep.ranking().rank(ix).is_infinite());
          continue;
        }
        CHECK(shift(crep.ranking().rank(ix), -crep.kappa0()) ==
              ExtendedNat(raw_penalty(kb, eta, world)));
      }
    } catch (const UnsatisfiableStrictPartError&) {
      continue;
    }
  }
}

TEST_CASE("crep tables agree with the naive oracle") {
  testgen::Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const DefeasibleKb kb = testgen::random_dkb(rng, {.max_dbox = 2});
    std::vector<std::uint64_t> eta(kb.dbox.size());
    std::vector<long long> eta_ll(kb.dbox.size());
    for (std::size_t i = 0; i < eta.size(); ++i) {
      eta[i] = 1 + rng() % 3;
      eta_ll[i] = static_cast<long long>(eta[i]);
    }
    long long kappa0 = 0;
    const auto table = oracle::crep_table(kb, eta_ll, &kappa0);
    if (!table) {
      CHECK_THROWS_AS(build(kb, eta), UnsatisfiableStrictPartError);
      continue;
    }
    const CRepresentation crep = build(kb, eta);
    CHECK(crep.kappa0() == kappa0);
    for (const auto& [world, rank] : *table) {
      const ExtendedNat got = crep.ranking().rank(oracle::encode_bits(kb.vocab, world));
      CHECK(rank.inf == got.is_infinite());
      if (!rank.inf) CHECK(static_cast<long long>(got.value()) == rank.v);
    }
    // modelhood agrees as well
    CHECK(is_model(crep.ranking(), kb, SatisfactionMode::Strict) ==
          oracle::is_model(*table, kb, false));
  }
}

TEST_CASE("skeptical and credulous inference") {
  const DefeasibleKb single = fixtures::single_dci();
  const SearchBudget budget{2, SatisfactionMode::Strict};

  const auto skeptical = c_inference(single, parse_statement("A ~< B", single.vocab),
                                     InferenceQuantifier::Skeptical, budget);
  CHECK(skeptical.verdict == InferenceVerdict::HoldsWithinBound);

  const auto credulous = c_inference(single, parse_statement("top <= top", single.vocab),
                                     InferenceQuantifier::Credulous, budget);
  CHECK(credulous.verdict == InferenceVerdict::Holds);
  REQUIRE(credulous.witness.has_value());
  // the witness re-validates and entails the query
  const CRepresentation again = build(single, credulous.witness->eta, credulous.witness->kappa0);
  CHECK(is_model(again.ranking(), single, SatisfactionMode::Strict));
  CHECK(kappa_entails(again, parse_statement("top <= top", single.vocab)));

  const auto no_family = c_inference(fixtures::penguin(),
                                     parse_statement("N : Logician", fixtures::penguin().vocab),
                                     InferenceQuantifier::Skeptical, budget);
  CHECK(no_family.verdict == InferenceVerdict::NoCRepresentationWithinBound);

  // a skeptical failure carries a refuting witness
  const auto refuted = c_inference(single, parse_statement("a : A & B", single.vocab),
                                   InferenceQuantifier::Skeptical, budget);
  CHECK(refuted.verdict == InferenceVerdict::Fails);
  REQUIRE(refuted.witness.has_value());
  const CRepresentation refuter = build(single, refuted.witness->eta, refuted.witness->kappa0);
  CHECK(!kappa_entails(refuter, parse_statement("a : A & B", single.vocab)));
}
