#include "alcor/crep.hpp"

#include <bit>

#include "alcor/errors.hpp"

namespace alcor {

namespace {

// Violator bodies C_i n ~D_i of every DBox entry, compiled once.
std::vector<CompiledConcept> violator_bodies(const DefeasibleKb& kb) {
  std::vector<CompiledConcept> out;
  out.reserve(kb.dbox.size());
  for (const auto& e : kb.dbox)
    out.emplace_back(ConceptExpr::conjunction(e.lhs, ConceptExpr::negation(e.rhs)), kb.vocab);
  return out;
}

void check_eta(const DefeasibleKb& kb, std::span<const std::uint64_t> eta, bool allow_zero) {
  if (eta.size() != kb.dbox.size())
    throw ValidationError("eta has " + std::to_string(eta.size()) + " entries, DBox has " +
                          std::to_string(kb.dbox.size()));
  if (!allow_zero)
    for (std::uint64_t e : eta)
      if (e == 0) throw ValidationError("impact factors must be positive (pass allow-zero to override)");
}

}  // namespace

std::uint64_t raw_penalty(const DefeasibleKb& kb, std::span<const std::uint64_t> eta,
                          const Interpretation& i) {
  check_eta(kb, eta, true);
  if (!satisfies_strict_part(i, kb))
    throw ContractError("raw penalty is defined on models of the strict part only");
  const auto bodies = violator_bodies(kb);
  std::vector<std::uint64_t> stack;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < bodies.size(); ++k)
    total += eta[k] * static_cast<std::uint64_t>(std::popcount(bodies[k].evaluate(i, stack)));
  return total;
}

namespace {

// Raw penalties for every interpretation; infinity marks non-models of the
// strict part.  Shared by normalization and build.
std::vector<ExtendedNat> penalty_table(const DefeasibleKb& kb, std::span<const std::uint64_t> eta,
                                       int bit_budget, ExtendedNat& minimum) {
  const std::uint64_t n = interpretation_count(kb.vocab, bit_budget);
  const auto bodies = violator_bodies(kb);
  const CompiledStrictPart strict(kb);
  std::vector<ExtendedNat> table(n, ExtendedNat::infinity());
  std::vector<std::uint64_t> stack;
  minimum = ExtendedNat::infinity();
  for (std::uint64_t ix = 0; ix < n; ++ix) {
    const Interpretation world(kb.vocab, ix);
    if (!strict.holds(world, stack)) continue;
    std::uint64_t raw = 0;
    for (std::size_t k = 0; k < bodies.size(); ++k)
      raw += eta[k] * static_cast<std::uint64_t>(std::popcount(bodies[k].evaluate(world, stack)));
    table[ix] = ExtendedNat(raw);
    minimum = min(minimum, table[ix]);
  }
  return table;
}

}  // namespace

std::int64_t normalization_constant(const DefeasibleKb& kb, std::span<const std::uint64_t> eta,
                                    int bit_budget) {
  check_eta(kb, eta, true);
  ExtendedNat minimum = ExtendedNat::infinity();
  penalty_table(kb, eta, bit_budget, minimum);
  if (minimum.is_infinite())
    throw UnsatisfiableStrictPartError("the strict part T u A has no Herbrand model");
  return -static_cast<std::int64_t>(minimum.value());
}

CRepresentation build(const DefeasibleKb& kb, std::vector<std::uint64_t> eta,
                      std::optional<std::int64_t> kappa0, SatisfactionMode mode, int bit_budget,
                      bool allow_zero_eta) {
  kb.validate();
  check_eta(kb, eta, allow_zero_eta);
  ExtendedNat minimum = ExtendedNat::infinity();
  std::vector<ExtendedNat> table = penalty_table(kb, eta, bit_budget, minimum);
  if (minimum.is_infinite())
    throw UnsatisfiableStrictPartError("the strict part T u A has no Herbrand model");
  const std::int64_t forced = -static_cast<std::int64_t>(minimum.value());
  if (kappa0 && *kappa0 != forced)
    throw ValidationError("kappa0 = " + std::to_string(*kappa0) +
                          " does not normalize this ranking (forced value " +
                          std::to_string(forced) + ")");
  for (auto& r : table) r = shift(r, forced);
  return CRepresentation(kb, std::move(eta), forced,
                         RankingFunction(kb.vocab, std::move(table)), mode);
}

bool is_c_representation(const DefeasibleKb& kb, std::span<const std::uint64_t> eta,
                         std::optional<std::int64_t> kappa0, SatisfactionMode mode, int bit_budget,
                         bool allow_zero_eta) {
  const CRepresentation crep = build(kb, std::vector<std::uint64_t>(eta.begin(), eta.end()),
                                     kappa0, mode, bit_budget, allow_zero_eta);
  return is_model(crep.ranking(), kb, mode);
}

bool kappa_entails(const CRepresentation& crep, const Statement& q) {
  validate(q, crep.kb().vocab);
  if (const auto* dci = std::get_if<Dci>(&q))
    return satisfies_dci(crep.ranking(), *dci, crep.mode());
  if (const auto* qdci = std::get_if<Qdci>(&q)) return satisfies_qdci(crep.ranking(), *qdci);
  return satisfies_classical(crep.ranking(), q);
}

std::vector<EtaAssignment> find_c_representations(const DefeasibleKb& kb,
                                                  const SearchBudget& budget, int bit_budget) {
  kb.validate();
  if (budget.eta_max < 1) throw ValidationError("eta_max must be at least 1");
  const std::size_t n = kb.dbox.size();
  std::vector<EtaAssignment> found;
  std::vector<std::uint64_t> eta(n, 1);
  for (;;) {
    // An unsatisfiable strict part propagates; no eta can repair it.
    const CRepresentation crep = build(kb, eta, std::nullopt, budget.mode, bit_budget);
    if (is_model(crep.ranking(), kb, budget.mode)) found.push_back({eta, crep.kappa0()});
    // Lexicographic odometer, last coordinate fastest.
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
  return found;
}

std::string to_string(InferenceVerdict v) {
  switch (v) {
    case InferenceVerdict::Holds: return "holds";
    case InferenceVerdict::Fails: return "fails";
    case InferenceVerdict::HoldsWithinBound: return "holds-within-bound";
    case InferenceVerdict::FailsWithinBound: return "fails-within-bound";
    case InferenceVerdict::NoCRepresentationWithinBound:
      return "no-c-representation-within-bound";
  }
  return "?";
}

InferenceResult c_inference(const DefeasibleKb& kb, const Statement& query,
                            InferenceQuantifier quantifier, const SearchBudget& budget,
                            int bit_budget) {
  validate(query, kb.vocab);
  const auto family = find_c_representations(kb, budget, bit_budget);
  if (family.empty()) return {InferenceVerdict::NoCRepresentationWithinBound, std::nullopt};
  for (const auto& assignment : family) {
    const CRepresentation crep =
        build(kb, assignment.eta, assignment.kappa0, budget.mode, bit_budget);
    const bool entailed = kappa_entails(crep, query);
    if (quantifier == InferenceQuantifier::Credulous && entailed)
      return {InferenceVerdict::Holds, assignment};
    if (quantifier == InferenceQuantifier::Skeptical && !entailed)
      return {InferenceVerdict::Fails, assignment};
  }
  return {quantifier == InferenceQuantifier::Credulous ? InferenceVerdict::FailsWithinBound
                                                       : InferenceVerdict::HoldsWithinBound,
          std::nullopt};
}

}  // namespace alcor
