#ifndef ALCOR_TESTS_FIXTURES_HPP
#define ALCOR_TESTS_FIXTURES_HPP

#include <string>

#include "alcor/parser.hpp"
#include "alcor/ranking.hpp"

namespace alcor::fixtures {

// Defeasible penguin triangle with impact annotations (1, 2, 3) and the
// assertion that N is a logician.
inline DefeasibleKb penguin() {
  return std::get<DefeasibleKb>(parse_document(R"(
    vocab {
      concepts: Logician, Scientist, Experiments;
      roles: ;
      individuals: N;
    }
    dbox {
      Logician ~< Scientist [1];
      Logician ~< !Experiments [2];
      Scientist ~< Experiments [3];
    }
    abox {
      N : Logician;
    }
  )"));
}

// The weighted triangle with weights 3, 2, 1 and a strict ABox.
inline WeightedKb penguin_weighted() {
  return std::get<WeightedKb>(parse_document(R"(
    vocab {
      concepts: Logician, Scientist, Experiments;
      roles: ;
      individuals: N;
    }
    tbox {
      Logician <= Scientist [3];
      Scientist <= Experiments [2];
      Logician <= !Experiments [1];
    }
    abox {
      N : Logician [inf];
    }
  )"));
}

inline WeightedKb mono() {
  return std::get<WeightedKb>(
      parse_document("vocab { concepts: A; roles: ; individuals: a; } abox { a : A [1]; }"));
}

inline WeightedKb mono_prime() {
  return std::get<WeightedKb>(parse_document(
      "vocab { concepts: A; roles: ; individuals: a; } abox { a : A [1]; a : !A [2]; }"));
}

inline DefeasibleKb single_dci() {
  return std::get<DefeasibleKb>(
      parse_document("vocab { concepts: A, B; roles: ; individuals: a; } dbox { A ~< B; }"));
}

// The ranking induced by penguin() with eta = (1, 2, 3) and kappa0 = -1.
// World index bits: Logician(N) = bit 0, Scientist(N) = bit 1,
// Experiments(N) = bit 2.
inline RankingFunction kappa_star() {
  const auto inf = ExtendedNat::infinity();
  const DefeasibleKb kb = penguin();
  return RankingFunction(kb.vocab, {inf, 0, inf, 2, inf, 2, inf, 1});
}

}  // namespace alcor::fixtures

#endif  // ALCOR_TESTS_FIXTURES_HPP
