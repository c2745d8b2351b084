#ifndef ALCOR_CREP_HPP
#define ALCOR_CREP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alcor/ranking.hpp"

namespace alcor {

// Bounds for the impact-factor search.  The eta space is unbounded in
// general, so search-based answers are qualified as "within bound".
struct SearchBudget {
  std::uint64_t eta_max = 8;
  SatisfactionMode mode = SatisfactionMode::Strict;
};

// A candidate c-representation: impact factors (one per DBox entry, in DBox
// order), the forced normalization constant, and the fully materialized
// ranking.  On models of T u A the rank is kappa0 + sum of f_i * eta_i with
// f_i the violator count of the i-th entry; off them it is infinite.
class CRepresentation {
 public:
  const DefeasibleKb& kb() const { return kb_; }
  const std::vector<std::uint64_t>& eta() const { return eta_; }
  std::int64_t kappa0() const { return kappa0_; }
  const RankingFunction& ranking() const { return ranking_; }
  SatisfactionMode mode() const { return mode_; }

 private:
  friend CRepresentation build(const DefeasibleKb&, std::vector<std::uint64_t>,
                               std::optional<std::int64_t>, SatisfactionMode, int, bool);
  CRepresentation(DefeasibleKb kb, std::vector<std::uint64_t> eta, std::int64_t kappa0,
                  RankingFunction ranking, SatisfactionMode mode)
      : kb_(std::move(kb)),
        eta_(std::move(eta)),
        kappa0_(kappa0),
        ranking_(std::move(ranking)),
        mode_(mode) {}

  DefeasibleKb kb_;
  std::vector<std::uint64_t> eta_;
  std::int64_t kappa0_;
  RankingFunction ranking_;
  SatisfactionMode mode_;
};

// Sum of eta_i * (violators of the i-th DBox entry).  A quantified entry
// counts its violators the same way: summing the nominal-guarded instances
// gives exactly |(C n ~D)^I|.  The interpretation must satisfy T u A.
std::uint64_t raw_penalty(const DefeasibleKb&, std::span<const std::uint64_t> eta,
                          const Interpretation&);

// kappa0 = -(minimum raw penalty over models of T u A), which forces a
// rank-0 interpretation.  Throws UnsatisfiableStrictPartError when T u A has
// no Herbrand model.
std::int64_t normalization_constant(const DefeasibleKb&, std::span<const std::uint64_t> eta,
                                    int bit_budget = kDefaultBitBudget);

// Materializes the ranking for an eta vector.  A supplied kappa0 is validated
// against the forced value, never trusted.  Entries must be positive unless
// allow_zero_eta is set.
CRepresentation build(const DefeasibleKb&, std::vector<std::uint64_t> eta,
                      std::optional<std::int64_t> kappa0 = std::nullopt,
                      SatisfactionMode mode = SatisfactionMode::Strict,
                      int bit_budget = kDefaultBitBudget, bool allow_zero_eta = false);

// build succeeds and the derived ranking is a model of the knowledge base.
bool is_c_representation(const DefeasibleKb&, std::span<const std::uint64_t> eta,
                         std::optional<std::int64_t> kappa0, SatisfactionMode mode,
                         int bit_budget = kDefaultBitBudget, bool allow_zero_eta = false);

// Statement entailment through one fixed c-representation: classical
// statements via the rank-0 worlds, quantified inclusions via their
// per-individual inequality, open inclusions per the representation's mode.
bool kappa_entails(const CRepresentation&, const Statement&);

struct EtaAssignment {
  std::vector<std::uint64_t> eta;
  std::int64_t kappa0 = 0;
  bool operator==(const EtaAssignment& o) const { return eta == o.eta && kappa0 == o.kappa0; }
};

// Every eta in [1, eta_max]^n whose ranking is a model, with its forced
// kappa0, in lexicographic order.  Impact-factor hints on the KB do not
// restrict the search; they are defaults for build().
std::vector<EtaAssignment> find_c_representations(const DefeasibleKb&, const SearchBudget&,
                                                  int bit_budget = kDefaultBitBudget);

enum class InferenceQuantifier { Skeptical, Credulous };

enum class InferenceVerdict {
  Holds,             // credulous: a witness entails the query (sound)
  Fails,             // skeptical: a witness refutes the query (sound)
  HoldsWithinBound,  // skeptical: no refuting c-representation within bound
  FailsWithinBound,  // credulous: no entailing c-representation within bound
  NoCRepresentationWithinBound,
};

std::string to_string(InferenceVerdict);

struct InferenceResult {
  InferenceVerdict verdict;
  std::optional<EtaAssignment> witness;  // first witness in lexicographic order
};

// Skeptical / credulous c-inference over the bounded family of
// c-representations.
InferenceResult c_inference(const DefeasibleKb&, const Statement& query, InferenceQuantifier,
                            const SearchBudget&, int bit_budget = kDefaultBitBudget);

}  // namespace alcor

#endif  // ALCOR_CREP_HPP
