#ifndef ALCOR_BRIDGE_HPP
#define ALCOR_BRIDGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "alcor/cost.hpp"
#include "alcor/crep.hpp"

namespace alcor {

enum class TranslationKind { ToWkb, QuantifiedToCRep, OpenToCRep, StrictAbox };

// Weighted translation of a defeasible KB under fixed impact factors: the
// strict TBox and ABox keep infinite weight, and each DBox entry becomes the
// corresponding material inclusion weighted by its eta.  Purely syntactic.
WeightedKb to_wkb(const DefeasibleKb&, std::span<const std::uint64_t> eta);
WeightedKb to_wkb(const CRepresentation&);

// Replaces every finite-weight concept assertion a : C by the TBox axiom
// {a} <= C with the same weight.  Finite-weight role assertions have no
// nominal counterpart and are rejected.
WeightedKb strict_abox_translation(const WeightedKb&);

struct CRepTranslation {
  DefeasibleKb kb;
  RankingFunction ranking;
  std::int64_t kappa0 = 0;
};

// Open translation: finite-weight GCIs become open defeasible inclusions
// whose impact factors are the original weights; the ranking shifts the cost
// function by kappa0 = -optimal cost.  Requires a strict ABox and a
// satisfiable strict part.
CRepTranslation open_translation(const WeightedKb&, int bit_budget = kDefaultBitBudget);

// Quantified translation: one nominal-guarded inclusion {a} n C ~< D per
// individual and finite-weight GCI, each violated at most once per
// interpretation.
CRepTranslation quantified_translation(const WeightedKb&, int bit_budget = kDefaultBitBudget);

// For every finite-weight GCI A <= B, the cheapest world with an A n B
// instance is strictly cheaper than the cheapest world with an A n ~B
// instance.
bool is_c_compatible(const WeightedKb&, int bit_budget = kDefaultBitBudget);

// The same inequality holding per individual.
bool is_strongly_c_compatible(const WeightedKb&, int bit_budget = kDefaultBitBudget);

// The finite-weight GCI witnessing failure, if any (first in TBox order).
std::optional<Gci> c_compatibility_witness(const WeightedKb&, bool strong,
                                           int bit_budget = kDefaultBitBudget);

enum class CheckStatus { Pass, Fail, NotApplicable, WithinBound };

std::string to_string(CheckStatus);

struct Witness {
  enum class Kind { Interpretation, Statement, Text };
  Kind kind = Kind::Text;
  std::string value;  // JSON world literal, statement text, or free text
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string details;
  std::optional<Witness> witness;
  bool informational = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  // Non-informational failures gate the exit status.
  bool all_passed() const;
};

// Runs every applicable bridge check on one concrete instance and reports
// pass/fail per check, with a counterexample on every failure:
//
//   modelhood  candidate rankings against their own knowledge base
//   (a) cost identity of the weighted translation, per candidate
//   (b) quantified and open translation rankings agree pointwise
//   (c) translated rank = cost + kappa0 pointwise
//   (d) strong compatibility implies compatibility
//   (e) compatibility iff the translation is a model (both variants)
//   (f) round trips (weighted -> defeasible -> weighted, and ranking of the
//       re-translated weighted translation), premise permitting
//   (g) the strict-ABox translation preserves costs pointwise
//   (h) optimal-certain entailment iff rank-0 satisfaction
//   (i) optimal-possible entailment as negated rank-0 satisfaction
//   (j) open-inclusion entailment iff the bounded-cost conditions at some k
//   (k) entailment over the bounded family of c-representations
//
// Checks that quantify over every c-representation are run over the bounded
// family only and report WithinBound.
VerificationReport verify_instance(const ParsedKb&, const SearchBudget& budget,
                                   int bit_budget = kDefaultBitBudget,
                                   bool full_mode_info = false);

}  // namespace alcor

#endif  // ALCOR_BRIDGE_HPP
