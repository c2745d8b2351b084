#include <doctest.h>

#include <random>

#include "alcor/parser.hpp"
#include "alcor/render.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace alcor;

TEST_CASE("weighted tbox statement with weight") {
  const auto kb = std::get<WeightedKb>(parse_document(
      "vocab { concepts: Logician, Scientist; roles: ; individuals: N; }"
      "tbox { Logician <= Scientist [3]; }"));
  REQUIRE(kb.tbox.size() == 1);
  CHECK(kb.tbox[0].gci.lhs == ConceptExpr::atom("Logician"));
  CHECK(kb.tbox[0].gci.rhs == ConceptExpr::atom("Scientist"));
  CHECK(kb.tbox[0].weight == ExtendedNat(3));
  CHECK(kb.abox.empty());
}

TEST_CASE("empty boxes and a one-element universe") {
  const auto kb = parse_document("vocab { concepts: ; roles: ; individuals: a; }");
  const auto& w = std::get<WeightedKb>(kb);
  CHECK(w.tbox.empty());
  CHECK(w.abox.empty());
  CHECK(w.vocab.universe_size() == 1);
}

TEST_CASE("infinite assertion weight") {
  const auto kb = std::get<WeightedKb>(parse_document(
      "vocab { concepts: Logician; roles: ; individuals: N; } abox { N : Logician [inf]; }"));
  REQUIRE(kb.abox.size() == 1);
  CHECK(kb.abox[0].weight.is_infinite());
  CHECK(kb.has_strict_abox());
}

TEST_CASE("omitted weights default to infinity") {
  const auto kb = std::get<WeightedKb>(parse_document(
      "vocab { concepts: A; roles: ; individuals: a; } tbox { A <= A; } abox { a : A; }"));
  CHECK(kb.tbox[0].weight.is_infinite());
  CHECK(kb.abox[0].weight.is_infinite());
}

TEST_CASE("concept grammar and precedence") {
  const Vocabulary v({"A", "B", "Logician"}, {"r"}, {"N"});
  CHECK(parse_concept("exists r.(A & !B)", v) ==
        ConceptExpr::exists("r", ConceptExpr::conjunction(
                                     ConceptExpr::atom("A"),
                                     ConceptExpr::negation(ConceptExpr::atom("B")))));
  CHECK(parse_concept("{N} & Logician", v) ==
        ConceptExpr::conjunction(ConceptExpr::nominal("N"), ConceptExpr::atom("Logician")));
  CHECK(parse_concept("top | bot", v) ==
        ConceptExpr::disjunction(ConceptExpr::top(), ConceptExpr::bot()));
  // negation binds tighter than conjunction
  CHECK(parse_concept("!A & B", v) ==
        ConceptExpr::conjunction(ConceptExpr::negation(ConceptExpr::atom("A")),
                                 ConceptExpr::atom("B")));
  // quantifier binds the dotted unary concept only
  CHECK(parse_concept("exists r.A & B", v) ==
        ConceptExpr::conjunction(ConceptExpr::exists("r", ConceptExpr::atom("A")),
                                 ConceptExpr::atom("B")));
  // & over |
  CHECK(parse_concept("A | B & A", v) ==
        ConceptExpr::disjunction(
            ConceptExpr::atom("A"),
            ConceptExpr::conjunction(ConceptExpr::atom("B"), ConceptExpr::atom("A"))));
}

TEST_CASE("statement parsing") {
  const Vocabulary v({"A", "B"}, {"r"}, {"a", "b"});
  CHECK(std::holds_alternative<Gci>(parse_statement("A <= B", v)));
  CHECK(std::holds_alternative<Dci>(parse_statement("A ~< B", v)));
  CHECK(std::holds_alternative<Qdci>(parse_statement("A ~<all B", v)));
  CHECK(std::holds_alternative<ConceptAssertion>(parse_statement("a : A & !B", v)));
  CHECK(std::holds_alternative<RoleAssertion>(parse_statement("(a, b) : r", v)));
}

TEST_CASE("diagnostics carry positions and categories") {
  CHECK_THROWS_AS(parse_document("vocab { concepts: A; roles: ; individuals: a; }\ntbox { B <= A; }"),
                  ParseError);
  try {
    parse_document("vocab { concepts: A; roles: ; individuals: a; }\ntbox { B <= A; }");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("undeclared concept name 'B'") != std::string::npos);
  }
  // duplicate declaration
  CHECK_THROWS_AS(parse_document("vocab { concepts: A, A; roles: ; individuals: a; }"),
                  ParseError);
  // negative weight
  CHECK_THROWS_AS(parse_document(
                      "vocab { concepts: A; roles: ; individuals: a; } abox { a : A [-1]; }"),
                  ParseError);
  // reserved word as a name
  CHECK_THROWS_AS(parse_document("vocab { concepts: top; roles: ; individuals: a; }"),
                  ParseError);
  // defeasible documents keep their strict part strict
  CHECK_THROWS_AS(parse_document("vocab { concepts: A; roles: ; individuals: a; }"
                                 "tbox { A <= A [1]; } dbox { A ~< A; }"),
                  ParseError);
  // dbox impacts must be positive and finite
  CHECK_THROWS_AS(parse_document("vocab { concepts: A, B; roles: ; individuals: a; }"
                                 "dbox { A ~< B [0]; }"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("vocab { concepts: A, B; roles: ; individuals: a; }"
                                 "dbox { A ~< B [inf]; }"),
                  ParseError);
  // duplicate defeasible statement
  CHECK_THROWS_AS(parse_document("vocab { concepts: A, B; roles: ; individuals: a; }"
                                 "dbox { A ~< B; A ~< B [2]; }"),
                  ParseError);
}

TEST_CASE("defeasible strict parts accept explicit [inf] annotations") {
  const auto kb = std::get<DefeasibleKb>(parse_document(
      "vocab { concepts: A, B; roles: ; individuals: a; }"
      "tbox { A <= B [inf]; } dbox { A ~< B; } abox { a : A [inf]; }"));
  CHECK(kb.tbox.size() == 1);
  CHECK(kb.abox.size() == 1);
}

TEST_CASE("~<all lexes as a whole word only") {
  const auto kb = std::get<DefeasibleKb>(parse_document(
      "vocab { concepts: A, allergy; roles: ; individuals: a; }"
      "dbox { A ~<allergy; A ~<all allergy; }"));
  REQUIRE(kb.dbox.size() == 2);
  CHECK(!kb.dbox[0].quantified);
  CHECK(kb.dbox[0].rhs == ConceptExpr::atom("allergy"));
  CHECK(kb.dbox[1].quantified);
}

TEST_CASE("comments and whitespace") {
  const auto kb = parse_document(
      "# a comment\nvocab { concepts: A; # inline\n roles: ; individuals: a; }\n# trailing");
  CHECK(std::get<WeightedKb>(kb).vocab.concept_count() == 1);
}

TEST_CASE("render round trip on generated knowledge bases") {
  testgen::Rng rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    if (trial % 2 == 0) {
      const WeightedKb kb = testgen::random_wkb(rng);
      const auto back = parse_document(render(kb));
      REQUIRE(std::holds_alternative<WeightedKb>(back));
      CHECK(std::get<WeightedKb>(back) == kb);
    } else {
      const DefeasibleKb kb = testgen::random_dkb(rng, {}, trial % 4 == 1);
      const auto back = parse_document(render(kb));
      REQUIRE(std::holds_alternative<DefeasibleKb>(back));
      CHECK(std::get<DefeasibleKb>(back) == kb);
    }
  }
}

TEST_CASE("fixed lexemes in rendered output") {
  const std::string weighted = render(fixtures::penguin_weighted());
  CHECK(weighted.find("N : Logician [inf];") != std::string::npos);
  const std::string defeasible = render(fixtures::penguin());
  CHECK(defeasible.find("Logician ~< !Experiments [2];") != std::string::npos);
}

TEST_CASE("parser totality on noise") {
  std::mt19937_64 rng(7);
  const std::string alphabet =
      "abcdefgXYZ0123456789 \n\t{}();:,.&|!<=~[]#-_\"'\\@";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const std::size_t len = rng() % 160;
    for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    try {
      (void)parse_document(text);
    } catch (const ParseError&) {
      // the only acceptable failure mode
    }
  }
  CHECK(true);
}

TEST_CASE("statement parser totality on noise") {
  const Vocabulary v({"A", "B"}, {"r"}, {"a", "b"});
  std::mt19937_64 rng(8);
  const std::string alphabet = "ABab r(),:<=~!&|.{}[]#\n\t0123456789";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    try {
      (void)parse_statement(text, v);
    } catch (const ParseError&) {
    }
  }
  CHECK(true);
}

TEST_CASE("deep nesting is rejected, not crashed on") {
  std::string text = "vocab { concepts: A; roles: ; individuals: a; } tbox { ";
  for (int i = 0; i < 5000; ++i) text += "(";
  text += "A";
  for (int i = 0; i < 5000; ++i) text += ")";
  text += " <= A; }";
  CHECK_THROWS_AS(parse_document(text), ParseError);
}
