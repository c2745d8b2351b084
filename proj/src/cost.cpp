#include "alcor/cost.hpp"

#include <bit>

#include "alcor/errors.hpp"

namespace alcor {

std::uint64_t gci_violations(const Interpretation& i, const Gci& g) {
  return extension(i, ConceptExpr::conjunction(g.lhs, ConceptExpr::negation(g.rhs)));
}

std::vector<std::size_t> abox_violations(const Interpretation& i,
                                         const std::vector<WeightedAssertion>& abox) {
  std::vector<std::size_t> out;
  for (std::size_t ix = 0; ix < abox.size(); ++ix)
    if (!satisfies(i, abox[ix].assertion)) out.push_back(ix);
  return out;
}

CostEvaluator::CostEvaluator(const WeightedKb& kb) {
  for (const auto& t : kb.tbox) {
    tbox_.push_back({CompiledConcept(ConceptExpr::conjunction(t.gci.lhs, ConceptExpr::negation(t.gci.rhs)),
                                     kb.vocab),
                     t.weight});
  }
  for (const auto& a : kb.abox) {
    CompiledAssertion ca;
    ca.weight = a.weight;
    if (const auto* c = std::get_if<ConceptAssertion>(&a.assertion)) {
      auto ix = kb.vocab.individual_index(c->individual);
      if (!ix) throw ValidationError("undeclared individual name '" + c->individual + "'");
      ca.individual = *ix;
      ca.expr.emplace(c->expr, kb.vocab);
    } else {
      const auto& r = std::get<RoleAssertion>(a.assertion);
      auto rx = kb.vocab.role_index(r.role);
      auto sx = kb.vocab.individual_index(r.subject);
      auto ox = kb.vocab.individual_index(r.object);
      if (!rx || !sx || !ox) throw ValidationError("undeclared name in role assertion");
      ca.role = *rx;
      ca.subject = *sx;
      ca.object = *ox;
    }
    abox_.push_back(std::move(ca));
  }
}

ExtendedNat CostEvaluator::operator()(const Interpretation& i) const {
  ExtendedNat total = 0;
  std::vector<std::uint64_t> stack;
  for (const auto& t : tbox_) {
    const std::uint64_t violators = t.violators.evaluate(i, stack);
    total += t.weight * static_cast<std::uint64_t>(std::popcount(violators));
  }
  for (const auto& a : abox_) {
    bool holds;
    if (a.expr) {
      holds = (a.expr->evaluate(i, stack) >> a.individual) & 1;
    } else {
      holds = i.role_member(a.role, a.subject, a.object);
    }
    if (!holds) total += a.weight;
  }
  return total;
}

ExtendedNat cost(const WeightedKb& kb, const Interpretation& i) { return CostEvaluator(kb)(i); }

ExtendedNat optimal_cost(const WeightedKb& kb, int bit_budget) {
  const std::uint64_t n = interpretation_count(kb.vocab, bit_budget);
  const CostEvaluator eval(kb);
  ExtendedNat best = ExtendedNat::infinity();
  for (std::uint64_t ix = 0; ix < n; ++ix) {
    best = min(best, eval(Interpretation(kb.vocab, ix)));
    if (best == ExtendedNat(0)) break;  // cannot improve
  }
  return best;
}

bool entails(const WeightedKb& kb, EntailmentMode mode, std::optional<std::uint64_t> k,
             const Statement& query, int bit_budget) {
  const bool bounded = mode == EntailmentMode::KCertain || mode == EntailmentMode::KPossible;
  const bool certain = mode == EntailmentMode::KCertain || mode == EntailmentMode::OptCertain;
  if (bounded && !k) throw ContractError("bounded entailment modes require k");
  if (!bounded && k) throw ContractError("k is only meaningful for bounded entailment modes");
  if (!is_classical(query))
    throw ContractError("cost-based entailment is defined for classical statements only");
  validate(query, kb.vocab);

  const std::uint64_t n = interpretation_count(kb.vocab, bit_budget);
  const CostEvaluator eval(kb);
  const CompiledStatement q(query, kb.vocab);
  // For the opt modes the qualifying worlds are those of exactly optimal
  // cost; for bounded modes those of cost <= k.
  const ExtendedNat threshold = bounded ? ExtendedNat(*k) : optimal_cost(kb, bit_budget);

  std::vector<std::uint64_t> stack;
  for (std::uint64_t ix = 0; ix < n; ++ix) {
    const Interpretation world(kb.vocab, ix);
    const ExtendedNat c = eval(world);
    const bool qualifies = bounded ? c <= threshold : c == threshold;
    if (!qualifies) continue;
    const bool sat = q.holds(world, stack);
    if (certain && !sat) return false;
    if (!certain && sat) return true;
  }
  return certain;
}

}  // namespace alcor
