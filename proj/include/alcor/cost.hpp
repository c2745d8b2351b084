#ifndef ALCOR_COST_HPP
#define ALCOR_COST_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "alcor/extended_nat.hpp"
#include "alcor/interpretation.hpp"
#include "alcor/kb.hpp"

namespace alcor {

// Violators of a GCI in an interpretation: (C n ~D)^I as a mask over U.
std::uint64_t gci_violations(const Interpretation&, const Gci&);

// Indices of the ABox entries the interpretation falsifies.
std::vector<std::size_t> abox_violations(const Interpretation&,
                                         const std::vector<WeightedAssertion>& abox);

// cost(I) = sum over TBox of weight * |violators| + sum of weights of
// falsified ABox entries.
ExtendedNat cost(const WeightedKb&, const Interpretation&);

// Minimum cost over all Herbrand interpretations.
ExtendedNat optimal_cost(const WeightedKb&, int bit_budget = kDefaultBitBudget);

enum class EntailmentMode { KCertain, KPossible, OptCertain, OptPossible };

// The four cost-based entailment relations.  `k` is required exactly for the
// bounded modes.  The query must be classical (GCI or assertion).  Universal
// modes are vacuously true over an empty world set; existential modes are
// false over it.
bool entails(const WeightedKb&, EntailmentMode, std::optional<std::uint64_t> k,
             const Statement& query, int bit_budget = kDefaultBitBudget);

// Evaluates the cost of many interpretations without recompiling the
// knowledge base each time.  Used by the enumeration-heavy operations here
// and in the bridge module.
class CostEvaluator {
 public:
  explicit CostEvaluator(const WeightedKb&);
  ExtendedNat operator()(const Interpretation&) const;

 private:
  struct WeightedBody {
    CompiledConcept violators;  // C n ~D
    ExtendedNat weight;
  };
  struct CompiledAssertion {
    std::optional<CompiledConcept> expr;  // concept assertions
    std::size_t individual = 0;
    std::size_t role = 0, subject = 0, object = 0;  // role assertions
    ExtendedNat weight;
  };
  std::vector<WeightedBody> tbox_;
  std::vector<CompiledAssertion> abox_;
};

}  // namespace alcor

#endif  // ALCOR_COST_HPP
