#include "alcor/ranking.hpp"

#include <algorithm>

#include "alcor/errors.hpp"

namespace alcor {

RankingFunction::RankingFunction(Vocabulary vocab, std::vector<ExtendedNat> table)
    : vocab_(std::make_shared<Vocabulary>(std::move(vocab))), table_(std::move(table)) {
  const std::size_t bits = interpretation_bits(*vocab_);
  if (bits > static_cast<std::size_t>(kMaxBitBudget))
    throw SizeLimitError("rank table would need " + std::to_string(bits) + " bits per index");
  const std::uint64_t expected = std::uint64_t{1} << bits;
  if (table_.size() != expected)
    throw ValidationError("rank table covers " + std::to_string(table_.size()) +
                          " interpretations, expected " + std::to_string(expected));
  const bool has_zero =
      std::any_of(table_.begin(), table_.end(), [](ExtendedNat r) { return r == ExtendedNat(0); });
  if (!has_zero) throw ValidationError("a ranking function needs a rank-0 interpretation");
}

std::vector<ExtendedNat> assertion_ranks(const RankingFunction& rf, const ConceptExpr& c) {
  const Vocabulary& v = rf.vocab();
  const std::size_t u = v.universe_size();
  std::vector<ExtendedNat> best(u, ExtendedNat::infinity());
  const CompiledConcept compiled(c, v);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t ix = 0; ix < rf.size(); ++ix) {
    const ExtendedNat r = rf.rank(ix);
    std::uint64_t members = compiled.evaluate(Interpretation(v, ix), stack);
    while (members != 0) {
      const int a = std::countr_zero(members);
      members &= members - 1;
      best[static_cast<std::size_t>(a)] = min(best[static_cast<std::size_t>(a)], r);
    }
  }
  return best;
}

ExtendedNat rank_of_assertion(const RankingFunction& rf, std::string_view individual,
                              const ConceptExpr& c) {
  const auto ix = rf.vocab().individual_index(individual);
  if (!ix) throw ValidationError("undeclared individual name '" + std::string(individual) + "'");
  return assertion_ranks(rf, c)[*ix];
}

ExtendedNat rank_of_role_assertion(const RankingFunction& rf, std::string_view subject,
                                   std::string_view object, std::string_view role) {
  const Vocabulary& v = rf.vocab();
  const auto sx = v.individual_index(subject);
  const auto ox = v.individual_index(object);
  const auto rx = v.role_index(role);
  if (!sx || !ox || !rx) throw ValidationError("undeclared name in role assertion");
  ExtendedNat best = ExtendedNat::infinity();
  for (std::uint64_t ix = 0; ix < rf.size(); ++ix) {
    if (Interpretation(v, ix).role_member(*rx, *sx, *ox)) best = min(best, rf.rank(ix));
  }
  return best;
}

ExtendedNat rank_of_concept(const RankingFunction& rf, const ConceptExpr& c) {
  ExtendedNat best = ExtendedNat::infinity();
  for (ExtendedNat r : assertion_ranks(rf, c)) best = min(best, r);
  return best;
}

namespace {

ConceptExpr with(const ConceptExpr& c, const ConceptExpr& d) {
  return ConceptExpr::conjunction(c, d);
}

ConceptExpr without(const ConceptExpr& c, const ConceptExpr& d) {
  return ConceptExpr::conjunction(c, ConceptExpr::negation(d));
}

}  // namespace

ExtendedNat rank_of_dci(const RankingFunction& rf, const Dci& dci) {
  const auto verifying = assertion_ranks(rf, with(dci.lhs, dci.rhs));
  const auto antecedent = assertion_ranks(rf, dci.lhs);
  ExtendedNat best = ExtendedNat::infinity();
  for (std::size_t a = 0; a < antecedent.size(); ++a) {
    if (antecedent[a].is_infinite()) continue;  // contributes infinity
    best = min(best, verifying[a] - antecedent[a]);
  }
  return best;
}

bool satisfies_classical(const RankingFunction& rf, const Statement& s) {
  validate(s, rf.vocab());
  const CompiledStatement compiled(s, rf.vocab());
  std::vector<std::uint64_t> stack;
  for (std::uint64_t ix = 0; ix < rf.size(); ++ix) {
    if (rf.rank(ix) != ExtendedNat(0)) continue;
    if (!compiled.holds(Interpretation(rf.vocab(), ix), stack)) return false;
  }
  return true;
}

bool satisfies_qdci(const RankingFunction& rf, const Qdci& q) {
  const auto verifying = assertion_ranks(rf, with(q.lhs, q.rhs));
  const auto falsifying = assertion_ranks(rf, without(q.lhs, q.rhs));
  for (std::size_t a = 0; a < verifying.size(); ++a)
    if (!(verifying[a] < falsifying[a])) return false;
  return true;
}

namespace {

struct RepAnalysis {
  std::vector<ExtendedNat> verifying;   // kappa(a : C n D)
  std::vector<ExtendedNat> falsifying;  // kappa(a : C n ~D)
  ExtendedNat concept_verifying = ExtendedNat::infinity();   // kappa(C n D)
  ExtendedNat concept_falsifying = ExtendedNat::infinity();  // kappa(C n ~D)
  std::uint64_t weak = 0;
  std::uint64_t strong = 0;
};

RepAnalysis analyze(const RankingFunction& rf, const Dci& dci) {
  RepAnalysis out;
  out.verifying = assertion_ranks(rf, with(dci.lhs, dci.rhs));
  out.falsifying = assertion_ranks(rf, without(dci.lhs, dci.rhs));
  for (std::size_t a = 0; a < out.verifying.size(); ++a) {
    out.concept_verifying = min(out.concept_verifying, out.verifying[a]);
    out.concept_falsifying = min(out.concept_falsifying, out.falsifying[a]);
  }
  for (std::size_t a = 0; a < out.verifying.size(); ++a) {
    if (out.verifying[a] == out.concept_verifying && out.verifying[a] < out.falsifying[a])
      out.weak |= std::uint64_t{1} << a;
  }
  // Strong representatives minimize kappa(a : C n ~D) among the weak ones.
  ExtendedNat least = ExtendedNat::infinity();
  for (std::size_t a = 0; a < out.falsifying.size(); ++a)
    if ((out.weak >> a) & 1) least = min(least, out.falsifying[a]);
  for (std::size_t a = 0; a < out.falsifying.size(); ++a)
    if (((out.weak >> a) & 1) && out.falsifying[a] == least) out.strong |= std::uint64_t{1} << a;
  return out;
}

}  // namespace

std::uint64_t weak_representatives(const RankingFunction& rf, const Dci& dci) {
  return analyze(rf, dci).weak;
}

std::uint64_t strong_representatives(const RankingFunction& rf, const Dci& dci) {
  return analyze(rf, dci).strong;
}

bool satisfies_dci(const RankingFunction& rf, const Dci& dci, SatisfactionMode mode) {
  const RepAnalysis rep = analyze(rf, dci);
  if (rep.strong == 0) return false;
  if (rep.concept_verifying < rep.concept_falsifying) return true;  // condition A
  if (mode == SatisfactionMode::Strict) return false;
  // Condition B: equal ranks, and every representative of the conditional
  // violates it less exceptionally than any representative of its opposite
  // verifies it.
  if (rep.concept_verifying != rep.concept_falsifying) return false;
  const Dci opposite{dci.lhs, ConceptExpr::negation(dci.rhs)};
  const RepAnalysis counter = analyze(rf, opposite);
  if (counter.strong == 0) return true;
  for (std::size_t a = 0; a < rep.falsifying.size(); ++a) {
    if (((rep.strong >> a) & 1) == 0) continue;
    for (std::size_t b = 0; b < rep.verifying.size(); ++b) {
      if (((counter.strong >> b) & 1) == 0) continue;
      // kappa(a : C n ~D) < kappa(b : C n D)
      if (!(rep.falsifying[a] < rep.verifying[b])) return false;
    }
  }
  return true;
}

bool satisfies_dbox_entry(const RankingFunction& rf, const DboxEntry& e, SatisfactionMode mode) {
  if (!e.quantified) return satisfies_dci(rf, Dci{e.lhs, e.rhs}, mode);
  for (const auto& a : rf.vocab().individual_names()) {
    const Dci grounded{ConceptExpr::conjunction(ConceptExpr::nominal(a), e.lhs), e.rhs};
    if (!satisfies_dci(rf, grounded, mode)) return false;
  }
  return true;
}

bool is_model(const RankingFunction& rf, const DefeasibleKb& kb, SatisfactionMode mode) {
  if (rf.vocab() != kb.vocab)
    throw ContractError("ranking function and knowledge base use different vocabularies");
  for (const auto& e : kb.dbox)
    if (!satisfies_dbox_entry(rf, e, mode)) return false;
  for (std::uint64_t ix = 0; ix < rf.size(); ++ix) {
    if (rf.rank(ix).is_finite() && !satisfies_strict_part(Interpretation(kb.vocab, ix), kb))
      return false;
  }
  return true;
}

}  // namespace alcor
