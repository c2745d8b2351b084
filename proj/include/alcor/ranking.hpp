#ifndef ALCOR_RANKING_HPP
#define ALCOR_RANKING_HPP

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "alcor/extended_nat.hpp"
#include "alcor/interpretation.hpp"
#include "alcor/kb.hpp"

namespace alcor {

enum class SatisfactionMode { Strict, Full };

// An explicit ranking function: one rank per Herbrand interpretation, at
// least one interpretation of rank 0.  Lower rank = more plausible.
class RankingFunction {
 public:
  // The table must cover every interpretation of the vocabulary; both are
  // checked at construction.
  RankingFunction(Vocabulary vocab, std::vector<ExtendedNat> table);

  const Vocabulary& vocab() const { return *vocab_; }
  std::uint64_t size() const { return table_.size(); }
  ExtendedNat rank(std::uint64_t index) const { return table_[index]; }
  ExtendedNat rank(const Interpretation& i) const { return table_[i.bits()]; }
  const std::vector<ExtendedNat>& table() const { return table_; }

  // Pointwise equality over the same vocabulary.
  bool operator==(const RankingFunction& o) const {
    return *vocab_ == *o.vocab_ && table_ == o.table_;
  }
  bool operator!=(const RankingFunction& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<ExtendedNat> table_;
};

// kappa(a : C): minimum rank of an interpretation satisfying the assertion;
// infinity when none does.
ExtendedNat rank_of_assertion(const RankingFunction&, std::string_view individual,
                              const ConceptExpr&);

// kappa((a, b) : r).
ExtendedNat rank_of_role_assertion(const RankingFunction&, std::string_view subject,
                                   std::string_view object, std::string_view role);

// kappa(C) = min over individuals of kappa(a : C).
ExtendedNat rank_of_concept(const RankingFunction&, const ConceptExpr&);

// kappa(C ~< D) = min over individuals of kappa(a : C n D) - kappa(a : C).
// An individual with kappa(a : C) infinite contributes infinity (the
// conditional is undefined on impossible antecedents, so the minimum ignores
// such individuals unless there is nothing else).
ExtendedNat rank_of_dci(const RankingFunction&, const Dci&);

// kappa(a : C) for every individual at once; one pass over the table.
std::vector<ExtendedNat> assertion_ranks(const RankingFunction&, const ConceptExpr&);

// s holds in every rank-0 interpretation.  Classical statements only.
bool satisfies_classical(const RankingFunction&, const Statement&);

// kappa(a : C n D) < kappa(a : C n ~D) for every individual.
bool satisfies_qdci(const RankingFunction&, const Qdci&);

// Weak representatives: individuals a with kappa(a : C n D) = kappa(C n D)
// and kappa(a : C n D) < kappa(a : C n ~D).  Mask over U.
std::uint64_t weak_representatives(const RankingFunction&, const Dci&);

// Strong representatives: weak representatives additionally minimizing
// kappa(a : C n ~D) among the weak representatives.
std::uint64_t strong_representatives(const RankingFunction&, const Dci&);

// Rep nonempty and: condition A (kappa(C n D) < kappa(C n ~D)); in Full mode
// alternatively condition B (ranks equal, and the representatives of C ~< ~D
// are either absent or uniformly less exceptional to contradict).
bool satisfies_dci(const RankingFunction&, const Dci&, SatisfactionMode mode);

// DBox entries: a quantified inclusion is expanded to its nominal-guarded
// instances ({a} n C ~< D for every a) before checking.
bool satisfies_dbox_entry(const RankingFunction&, const DboxEntry&, SatisfactionMode mode);

// kappa is a model of the KB: every DBox entry is satisfied and every
// interpretation falsifying T u A has infinite rank.
bool is_model(const RankingFunction&, const DefeasibleKb&, SatisfactionMode mode);

}  // namespace alcor

#endif  // ALCOR_RANKING_HPP
