#include <doctest.h>

#include <bit>

#include "alcor/cost.hpp"
#include "alcor/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace alcor;

namespace {

// Triangle world indices: Logician = bit 0, Scientist = bit 1,
// Experiments = bit 2.
constexpr std::uint64_t kLSE = 0b111;
constexpr std::uint64_t kLS = 0b011;

Gci gci(const WeightedKb& kb, std::size_t i) { return kb.tbox[i].gci; }

}  // namespace

TEST_CASE("violators of a GCI") {
  const WeightedKb kb = fixtures::penguin_weighted();
  const Interpretation lse(kb.vocab, kLSE);
  const Interpretation ls(kb.vocab, kLS);
  // Logician <= !Experiments is violated by N in {L,S,E}
  CHECK(gci_violations(lse, gci(kb, 2)) == 0b1);
  // Scientist <= Experiments is violated by N in {L,S,!E}
  CHECK(gci_violations(ls, gci(kb, 1)) == 0b1);
  // anything <= top is never violated
  CHECK(gci_violations(lse, Gci{ConceptExpr::atom("Logician"), ConceptExpr::top()}) == 0);
}

TEST_CASE("abox violations") {
  const WeightedKb kb = fixtures::penguin_weighted();
  const Interpretation no_l(kb.vocab, 0b000);
  const Interpretation with_l(kb.vocab, 0b001);
  CHECK(abox_violations(no_l, kb.abox) == std::vector<std::size_t>{0});
  CHECK(abox_violations(with_l, kb.abox).empty());
  CHECK(abox_violations(no_l, {}).empty());
}

TEST_CASE("triangle world costs") {
  const WeightedKb kb = fixtures::penguin_weighted();
  CHECK(cost(kb, Interpretation(kb.vocab, kLSE)) == ExtendedNat(1));
  CHECK(cost(kb, Interpretation(kb.vocab, kLS)) == ExtendedNat(2));
  for (std::uint64_t ix : {0b000, 0b010, 0b100, 0b110})
    CHECK(cost(kb, Interpretation(kb.vocab, ix)).is_infinite());
  CHECK(optimal_cost(kb) == ExtendedNat(1));
}

TEST_CASE("optimal cost degenerate cases") {
  const auto satisfiable = std::get<WeightedKb>(parse_document(
      "vocab { concepts: A; roles: ; individuals: a; } tbox { A <= A [2]; }"));
  CHECK(optimal_cost(satisfiable) == ExtendedNat(0));
  const auto empty =
      std::get<WeightedKb>(parse_document("vocab { concepts: ; roles: ; individuals: a; }"));
  CHECK(optimal_cost(empty) == ExtendedNat(0));
}

TEST_CASE("bounded and optimal entailment on the appendix pair") {
  const WeightedKb k = fixtures::mono();
  const WeightedKb k_prime = fixtures::mono_prime();
  const Statement q = parse_statement("a : A", k.vocab);

  CHECK(entails(k, EntailmentMode::KPossible, 1, q));
  CHECK(!entails(k_prime, EntailmentMode::KPossible, 1, q));

  CHECK(entails(k, EntailmentMode::OptPossible, std::nullopt, q));
  CHECK(!entails(k_prime, EntailmentMode::OptPossible, std::nullopt, q));

  CHECK(entails(k, EntailmentMode::OptCertain, std::nullopt, q));
  CHECK(!entails(k_prime, EntailmentMode::OptCertain, std::nullopt, q));

  CHECK(!entails(k, EntailmentMode::KCertain, 1, q));
  CHECK(!entails(k_prime, EntailmentMode::KCertain, 1, q));
}

TEST_CASE("optimal-certain on the triangle") {
  const WeightedKb kb = fixtures::penguin_weighted();
  CHECK(entails(kb, EntailmentMode::OptCertain, std::nullopt,
                parse_statement("N : Experiments", kb.vocab)));
}

TEST_CASE("every world cheaper than 3 keeps the heaviest rules") {
  const WeightedKb kb = fixtures::penguin_weighted();
  CHECK(entails(kb, EntailmentMode::KCertain, 2,
                parse_statement("Logician <= Scientist", kb.vocab)));
  CHECK(entails(kb, EntailmentMode::KCertain, 2, parse_statement("N : Scientist", kb.vocab)));
  // at 3 the world {Logician} qualifies and breaks both
  CHECK(!entails(kb, EntailmentMode::KCertain, 3,
                 parse_statement("Logician <= Scientist", kb.vocab)));
}

TEST_CASE("infinite optimal cost quantifies over every world") {
  const auto kb = std::get<WeightedKb>(parse_document(
      "vocab { concepts: A; roles: ; individuals: a; } tbox { top <= bot; }"));
  CHECK(optimal_cost(kb).is_infinite());
  // all worlds have cost = optc = inf, so the opt modes range over all of them
  CHECK(!entails(kb, EntailmentMode::OptCertain, std::nullopt, parse_statement("a : A", kb.vocab)));
  CHECK(entails(kb, EntailmentMode::OptPossible, std::nullopt, parse_statement("a : A", kb.vocab)));
  CHECK(entails(kb, EntailmentMode::OptCertain, std::nullopt,
                parse_statement("top <= top", kb.vocab)));
}

TEST_CASE("an empty qualifying set is vacuous for certainty, false for possibility") {
  // every world violates one of the two assertions, so every cost is 2
  const auto kb = std::get<WeightedKb>(parse_document(
      "vocab { concepts: A; roles: ; individuals: a; } abox { a : A [2]; a : !A [2]; }"));
  const Statement q = parse_statement("a : A", kb.vocab);
  CHECK(entails(kb, EntailmentMode::KCertain, 1, q));
  CHECK(!entails(kb, EntailmentMode::KPossible, 1, q));
}

TEST_CASE("k is validated") {
  const WeightedKb kb = fixtures::mono();
  const Statement q = parse_statement("a : A", kb.vocab);
  CHECK_THROWS_AS(entails(kb, EntailmentMode::KCertain, std::nullopt, q), ContractError);
  CHECK_THROWS_AS(entails(kb, EntailmentMode::OptCertain, 1, q), ContractError);
  CHECK_THROWS_AS(
      entails(kb, EntailmentMode::OptCertain, std::nullopt, parse_statement("A ~< A", kb.vocab)),
      ContractError);
}

TEST_CASE("certainty is antitone and possibility monotone in k") {
  testgen::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const WeightedKb kb = testgen::random_wkb(rng);
    const Statement q = testgen::random_classical_statement(rng, kb.vocab);
    for (std::uint64_t k = 0; k < 4; ++k) {
      const bool certain_hi = entails(kb, EntailmentMode::KCertain, k + 1, q);
      const bool certain_lo = entails(kb, EntailmentMode::KCertain, k, q);
      if (certain_hi) CHECK(certain_lo);
      const bool possible_lo = entails(kb, EntailmentMode::KPossible, k, q);
      const bool possible_hi = entails(kb, EntailmentMode::KPossible, k + 1, q);
      if (possible_lo) CHECK(possible_hi);
    }
  }
}

TEST_CASE("bounded certainty is monotone under KB extension") {
  testgen::Rng rng(32);
  int pairs = 0;
  while (pairs < 120) {
    WeightedKb kb = testgen::random_wkb(rng);
    WeightedKb extended = kb;
    // grow the KB, preserving existing weights
    if (pairs % 2 == 0) {
      extended.tbox.push_back({Gci{testgen::random_concept(rng, kb.vocab, 2),
                                   testgen::random_concept(rng, kb.vocab, 2)},
                               ExtendedNat(1 + rng() % 3)});
    } else {
      extended.abox.push_back({ConceptAssertion{kb.vocab.individual_names().front(),
                                                testgen::random_concept(rng, kb.vocab, 1)},
                               ExtendedNat(1 + rng() % 3)});
    }
    const Statement q = testgen::random_classical_statement(rng, kb.vocab);
    const std::uint64_t k = rng() % 4;
    if (entails(kb, EntailmentMode::KCertain, k, q))
      CHECK(entails(extended, EntailmentMode::KCertain, k, q));
    ++pairs;
  }
}

TEST_CASE("when the optimal cost is zero, optimal-certain is classical entailment") {
  testgen::Rng rng(33);
  int done = 0;
  while (done < 40) {
    const WeightedKb kb = testgen::random_wkb(rng);
    if (optimal_cost(kb) != ExtendedNat(0)) continue;
    const Statement q = testgen::random_classical_statement(rng, kb.vocab);
    // classical: q holds in every interpretation satisfying all axioms
    bool classical = true;
    for (const auto& world : oracle::enumerate_interpretations(kb.vocab)) {
      bool model = true;
      for (const auto& t : kb.tbox)
        if (!oracle::satisfies(kb.vocab, world, t.gci)) model = false;
      for (const auto& a : kb.abox) {
        const Statement s = std::visit([](const auto& x) { return Statement(x); }, a.assertion);
        if (!oracle::satisfies(kb.vocab, world, s)) model = false;
      }
      if (model && !oracle::satisfies(kb.vocab, world, q)) classical = false;
    }
    CHECK(entails(kb, EntailmentMode::OptCertain, std::nullopt, q) == classical);
    ++done;
  }
}

TEST_CASE("removing an axiom never raises a world's cost") {
  testgen::Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedKb kb = testgen::random_wkb(rng);
    if (kb.tbox.empty() && kb.abox.empty()) continue;
    WeightedKb smaller = kb;
    if (!smaller.tbox.empty())
      smaller.tbox.pop_back();
    else
      smaller.abox.pop_back();
    const std::uint64_t n = interpretation_count(kb.vocab);
    for (std::uint64_t ix = 0; ix < n; ++ix) {
      const Interpretation w(kb.vocab, ix);
      CHECK(cost(smaller, w) <= cost(kb, w));
    }
  }
}

TEST_CASE("cost and entailment agree with the naive oracle") {
  testgen::Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedKb kb = testgen::random_wkb(rng);
    for (const auto& world : oracle::enumerate_interpretations(kb.vocab)) {
      const Interpretation engine_world(kb.vocab, oracle::encode_bits(kb.vocab, world));
      const oracle::Ext expected = oracle::cost(kb, world);
      const ExtendedNat got = cost(kb, engine_world);
      CHECK(expected.inf == got.is_infinite());
      if (!expected.inf) CHECK(static_cast<long long>(got.value()) == expected.v);
    }
    const oracle::Ext opt = oracle::optimal_cost(kb);
    const ExtendedNat got_opt = optimal_cost(kb);
    CHECK(opt.inf == got_opt.is_infinite());
    if (!opt.inf) CHECK(static_cast<long long>(got_opt.value()) == opt.v);

    const Statement q = testgen::random_classical_statement(rng, kb.vocab);
    CHECK(entails(kb, EntailmentMode::OptCertain, std::nullopt, q) ==
          oracle::entails(kb, oracle::Mode::OptCertain, std::nullopt, q));
    CHECK(entails(kb, EntailmentMode::OptPossible, std::nullopt, q) ==
          oracle::entails(kb, oracle::Mode::OptPossible, std::nullopt, q));
    const long long k = static_cast<long long>(rng() % 4);
    CHECK(entails(kb, EntailmentMode::KCertain, k, q) ==
          oracle::entails(kb, oracle::Mode::KCertain, k, q));
    CHECK(entails(kb, EntailmentMode::KPossible, k, q) ==
          oracle::entails(kb, oracle::Mode::KPossible, k, q));
  }
}
