#include "alcor/bridge.hpp"

#include <algorithm>
#include <bit>

#include "alcor/errors.hpp"
#include "alcor/render.hpp"

namespace alcor {

WeightedKb to_wkb(const DefeasibleKb& kb, std::span<const std::uint64_t> eta) {
  if (eta.size() != kb.dbox.size())
    throw ValidationError("eta has " + std::to_string(eta.size()) + " entries, DBox has " +
                          std::to_string(kb.dbox.size()));
  WeightedKb out{kb.vocab, {}, {}};
  for (const auto& g : kb.tbox) out.tbox.push_back({g, ExtendedNat::infinity()});
  for (std::size_t i = 0; i < kb.dbox.size(); ++i) {
    // A quantified entry contributes the same material inclusion: summing its
    // nominal-guarded instances counts exactly |(C n ~D)^I|.
    out.tbox.push_back({Gci{kb.dbox[i].lhs, kb.dbox[i].rhs}, ExtendedNat(eta[i])});
  }
  for (const auto& a : kb.abox) out.abox.push_back({a, ExtendedNat::infinity()});
  return out;
}

WeightedKb to_wkb(const CRepresentation& crep) { return to_wkb(crep.kb(), crep.eta()); }

WeightedKb strict_abox_translation(const WeightedKb& kb) {
  WeightedKb out{kb.vocab, kb.tbox, {}};
  for (const auto& a : kb.abox) {
    if (a.weight.is_infinite()) {
      out.abox.push_back(a);
      continue;
    }
    const auto* ca = std::get_if<ConceptAssertion>(&a.assertion);
    if (ca == nullptr)
      throw ValidationError(
          "finite-weight role assertion '" + to_string(a.assertion) +
          "' has no strict-ABox translation (roles have no nominal counterpart)");
    out.tbox.push_back(
        {Gci{ConceptExpr::nominal(ca->individual), ca->expr}, a.weight});
  }
  return out;
}

namespace {

ConceptExpr guard(const std::string& individual, const ConceptExpr& c) {
  return ConceptExpr::conjunction(ConceptExpr::nominal(individual), c);
}

void check_translatable(const WeightedKb& kb) {
  if (!kb.has_strict_abox())
    throw ValidationError("the translation requires a strict ABox");
  std::vector<const Gci*> weak;
  for (const auto& t : kb.tbox) {
    if (t.weight.is_infinite()) continue;
    if (t.weight == ExtendedNat(0))
      throw ValidationError("weight-0 statement '" + to_string(t.gci) +
                            "' has no defeasible counterpart");
    for (const Gci* seen : weak)
      if (*seen == t.gci)
        throw ValidationError("duplicate weak statement '" + to_string(t.gci) +
                              "' cannot be translated");
    weak.push_back(&t.gci);
  }
}

std::int64_t forced_kappa0(const WeightedKb& kb, int bit_budget) {
  const ExtendedNat optc = optimal_cost(kb, bit_budget);
  if (optc.is_infinite())
    throw UnsatisfiableStrictPartError("the strict part has no Herbrand model");
  return -static_cast<std::int64_t>(optc.value());
}

}  // namespace

CRepTranslation open_translation(const WeightedKb& kb, int bit_budget) {
  check_translatable(kb);
  DefeasibleKb out{kb.vocab, {}, {}, {}};
  std::vector<CompiledConcept> bodies;       // violators of each weak GCI
  std::vector<std::uint64_t> etas;
  for (const auto& t : kb.tbox) {
    if (t.weight.is_infinite()) {
      out.tbox.push_back(t.gci);
      continue;
    }
    out.dbox.push_back({t.gci.lhs, t.gci.rhs, false, t.weight.value()});
    bodies.emplace_back(
        ConceptExpr::conjunction(t.gci.lhs, ConceptExpr::negation(t.gci.rhs)), kb.vocab);
    etas.push_back(t.weight.value());
  }
  for (const auto& a : kb.abox) out.abox.push_back(a.assertion);
  out.validate();

  const std::int64_t kappa0 = forced_kappa0(kb, bit_budget);
  const std::uint64_t n = interpretation_count(kb.vocab, bit_budget);
  std::vector<ExtendedNat> table(n, ExtendedNat::infinity());
  const CompiledStrictPart strict(out);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t ix = 0; ix < n; ++ix) {
    const Interpretation world(kb.vocab, ix);
    if (!strict.holds(world, stack)) continue;
    std::uint64_t raw = 0;
    for (std::size_t k = 0; k < bodies.size(); ++k)
      raw += etas[k] * static_cast<std::uint64_t>(std::popcount(bodies[k].evaluate(world, stack)));
    table[ix] = shift(ExtendedNat(raw), kappa0);
  }
  return {std::move(out), RankingFunction(kb.vocab, std::move(table)), kappa0};
}

CRepTranslation quantified_translation(const WeightedKb& kb, int bit_budget) {
  check_translatable(kb);
  DefeasibleKb out{kb.vocab, {}, {}, {}};
  std::vector<CompiledStatement> guarded;  // {a} n C <= D per DBox entry
  std::vector<std::uint64_t> etas;
  for (const auto& t : kb.tbox) {
    if (t.weight.is_infinite()) {
      out.tbox.push_back(t.gci);
      continue;
    }
    for (const auto& a : kb.vocab.individual_names()) {
      out.dbox.push_back({guard(a, t.gci.lhs), t.gci.rhs, false, t.weight.value()});
      guarded.emplace_back(Statement(Gci{guard(a, t.gci.lhs), t.gci.rhs}), kb.vocab);
      etas.push_back(t.weight.value());
    }
  }
  for (const auto& a : kb.abox) out.abox.push_back(a.assertion);
  out.validate();

  const std::int64_t kappa0 = forced_kappa0(kb, bit_budget);
  const std::uint64_t n = interpretation_count(kb.vocab, bit_budget);
  std::vector<ExtendedNat> table(n, ExtendedNat::infinity());
  const CompiledStrictPart strict(out);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t ix = 0; ix < n; ++ix) {
    const Interpretation world(kb.vocab, ix);
    if (!strict.holds(world, stack)) continue;
    std::uint64_t raw = 0;
    for (std::size_t k = 0; k < guarded.size(); ++k)
      if (!guarded[k].holds(world, stack)) raw += etas[k];  // f in {0, 1}
    table[ix] = shift(ExtendedNat(raw), kappa0);
  }
  return {std::move(out), RankingFunction(kb.vocab, std::move(table)), kappa0};
}

namespace {

struct CompatibilityMins {
  ExtendedNat verifying = ExtendedNat::infinity();   // min cost, some a : A n B
  ExtendedNat falsifying = ExtendedNat::infinity();  // min cost, some a : A n ~B
  std::vector<ExtendedNat> verifying_per_individual;
  std::vector<ExtendedNat> falsifying_per_individual;
};

CompatibilityMins compatibility_mins(const WeightedKb& kb, const Gci& gci, int bit_budget) {
  CompatibilityMins out;
  const std::size_t u = kb.vocab.universe_size();
  out.verifying_per_individual.assign(u, ExtendedNat::infinity());
  out.falsifying_per_individual.assign(u, ExtendedNat::infinity());
  const CompiledConcept verifying(ConceptExpr::conjunction(gci.lhs, gci.rhs), kb.vocab);
  const CompiledConcept falsifying(
      ConceptExpr::conjunction(gci.lhs, ConceptExpr::negation(gci.rhs)), kb.vocab);
  const CostEvaluator eval(kb);
  const std::uint64_t n = interpretation_count(kb.vocab, bit_budget);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t ix = 0; ix < n; ++ix) {
    const Interpretation world(kb.vocab, ix);
    const ExtendedNat c = eval(world);
    const std::uint64_t vmask = verifying.evaluate(world, stack);
    const std::uint64_t fmask = falsifying.evaluate(world, stack);
    if (vmask != 0) out.verifying = min(out.verifying, c);
    if (fmask != 0) out.falsifying = min(out.falsifying, c);
    for (std::size_t a = 0; a < u; ++a) {
      if ((vmask >> a) & 1)
        out.verifying_per_individual[a] = min(out.verifying_per_individual[a], c);
      if ((fmask >> a) & 1)
        out.falsifying_per_individual[a] = min(out.falsifying_per_individual[a], c);
    }
  }
  return out;
}

}  // namespace

std::optional<Gci> c_compatibility_witness(const WeightedKb& kb, bool strong, int bit_budget) {
  if (!kb.has_strict_abox())
    throw ValidationError("c-compatibility is defined for strict-ABox knowledge bases");
  for (const auto& t : kb.tbox) {
    if (t.weight.is_infinite()) continue;
    const CompatibilityMins mins = compatibility_mins(kb, t.gci, bit_budget);
    if (strong) {
      for (std::size_t a = 0; a < kb.vocab.universe_size(); ++a)
        if (!(mins.verifying_per_individual[a] < mins.falsifying_per_individual[a])) return t.gci;
    } else {
      if (!(mins.verifying < mins.falsifying)) return t.gci;
    }
  }
  return std::nullopt;
}

bool is_c_compatible(const WeightedKb& kb, int bit_budget) {
  return !c_compatibility_witness(kb, false, bit_budget).has_value();
}

bool is_strongly_c_compatible(const WeightedKb& kb, int bit_budget) {
  return !c_compatibility_witness(kb, true, bit_budget).has_value();
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
    case CheckStatus::WithinBound: return "within-bound";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::Fail && !c.informational;
  });
}

// ---------------------------------------------------------------------------
// verify_instance
// ---------------------------------------------------------------------------

namespace {

Witness world_witness(const Interpretation& i) {
  return {Witness::Kind::Interpretation, to_literal(i)};
}

Witness statement_witness(const std::string& text) { return {Witness::Kind::Statement, text}; }

std::string eta_text(const std::vector<std::uint64_t>& eta) {
  std::string s = "eta=(";
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eta[i]);
  }
  return s + ")";
}

// Statement-shaped queries for the entailment bridges: atomic assertions,
// role assertions, material inclusions between concept-name literals, plus
// the knowledge base's own classical statements.  Concepts beyond the first
// few are skipped to keep the set small on large vocabularies.
constexpr std::size_t kMaxQueryConcepts = 6;

std::vector<Statement> classical_query_set(const Vocabulary& v,
                                           const std::vector<Statement>& own) {
  std::vector<Statement> out;
  const std::size_t nc = std::min(v.concept_count(), kMaxQueryConcepts);
  for (const auto& a : v.individual_names())
    for (std::size_t c = 0; c < nc; ++c)
      out.push_back(ConceptAssertion{a, ConceptExpr::atom(v.concept_names()[c])});
  for (const auto& r : v.role_names())
    for (const auto& a : v.individual_names())
      for (const auto& b : v.individual_names()) out.push_back(RoleAssertion{a, b, r});
  std::vector<ConceptExpr> literals;
  for (std::size_t c = 0; c < nc; ++c) {
    literals.push_back(ConceptExpr::atom(v.concept_names()[c]));
    literals.push_back(ConceptExpr::negation(ConceptExpr::atom(v.concept_names()[c])));
  }
  for (const auto& lhs : literals)
    for (const auto& rhs : literals) out.push_back(Gci{lhs, rhs});
  out.insert(out.end(), own.begin(), own.end());
  return out;
}

std::vector<Dci> dci_query_set(const Vocabulary& v, const std::vector<DboxEntry>& dbox) {
  std::vector<Dci> out;
  const std::size_t nc = std::min(v.concept_count(), kMaxQueryConcepts);
  std::vector<ConceptExpr> literals;
  for (std::size_t c = 0; c < nc; ++c) {
    literals.push_back(ConceptExpr::atom(v.concept_names()[c]));
    literals.push_back(ConceptExpr::negation(ConceptExpr::atom(v.concept_names()[c])));
  }
  for (const auto& lhs : literals)
    for (const auto& rhs : literals) out.push_back(Dci{lhs, rhs});
  for (const auto& e : dbox)
    if (!e.quantified) out.push_back(Dci{e.lhs, e.rhs});
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const SearchBudget& budget, int bit_budget, bool full_mode_info)
      : budget_(budget), bit_budget_(bit_budget), full_mode_info_(full_mode_info) {}

  VerificationReport run(const ParsedKb& input) {
    if (const auto* w = std::get_if<WeightedKb>(&input)) {
      weighted(*w);
    } else {
      defeasible(std::get<DefeasibleKb>(input));
    }
    return std::move(report_);
  }

 private:
  void add(std::string name, CheckStatus status, std::string details,
           std::optional<Witness> witness = std::nullopt, bool informational = false) {
    report_.checks.push_back(
        {std::move(name), status, std::move(details), std::move(witness), informational});
  }

  void not_applicable(std::initializer_list<const char*> names, const std::string& why) {
    for (const char* n : names) add(n, CheckStatus::NotApplicable, why);
  }

  // --- weighted input -------------------------------------------------------

  void weighted(const WeightedKb& original) {
    original.validate();
    add("modelhood", CheckStatus::NotApplicable,
        "modelhood of derived rankings is reported under check (e)");
    add("a:cost-identity", CheckStatus::NotApplicable,
        "applies to defeasible inputs with candidate c-representations");

    // (g) strict-ABox translation, also fixing the KB used downstream.
    WeightedKb kb = original;
    if (original.has_strict_abox()) {
      add("g:strict-abox-cost-preservation", CheckStatus::Pass,
          "ABox already strict; the translation is the identity");
    } else {
      try {
        WeightedKb translated = strict_abox_translation(original);
        const CostEvaluator before(original);
        const CostEvaluator after(translated);
        const std::uint64_t n = interpretation_count(original.vocab, bit_budget_);
        std::optional<std::uint64_t> mismatch;
        for (std::uint64_t ix = 0; ix < n && !mismatch; ++ix) {
          const Interpretation world(original.vocab, ix);
          if (before(world) != after(world)) mismatch = ix;
        }
        if (mismatch) {
          add("g:strict-abox-cost-preservation", CheckStatus::Fail,
              "cost changed under the strict-ABox translation",
              world_witness(Interpretation(original.vocab, *mismatch)));
        } else {
          add("g:strict-abox-cost-preservation", CheckStatus::Pass,
              "costs preserved on all " + std::to_string(n) + " interpretations");
        }
        kb = std::move(translated);
      } catch (const ValidationError& e) {
        not_applicable({"g:strict-abox-cost-preservation", "b:translation-rankings-agree",
                        "c:cost-rank-identity", "d:strong-implies-compatible",
                        "e:compatibility-iff-modelhood", "f:round-trip", "h:optc-bridge",
                        "i:optp-bridge", "j:dci-k-bridge", "k:bounded-family-bridge"},
                       e.what());
        reorder_letters();
        return;
      }
    }

    // Compatibility flags need only cost arithmetic.
    const auto weak_witness = c_compatibility_witness(kb, false, bit_budget_);
    const auto strong_witness = c_compatibility_witness(kb, true, bit_budget_);
    const bool compatible = !weak_witness.has_value();
    const bool strongly = !strong_witness.has_value();

    std::optional<CRepTranslation> open;
    std::optional<CRepTranslation> quantified;
    std::string translation_error;
    try {
      open.emplace(open_translation(kb, bit_budget_));
      quantified.emplace(quantified_translation(kb, bit_budget_));
    } catch (const Error& e) {
      open.reset();
      quantified.reset();
      translation_error = e.what();
    }
    const bool translated_ok = open.has_value();

    if (!translated_ok) {
      not_applicable({"b:translation-rankings-agree", "c:cost-rank-identity"}, translation_error);
    } else {
      // (b) the two translations define the same ranking.
      if (open->ranking == quantified->ranking) {
        add("b:translation-rankings-agree", CheckStatus::Pass,
            "quantified and open translation rankings agree pointwise");
      } else {
        std::uint64_t ix = 0;
        while (open->ranking.rank(ix) == quantified->ranking.rank(ix)) ++ix;
        add("b:translation-rankings-agree", CheckStatus::Fail,
            "rankings diverge (open " + open->ranking.rank(ix).to_string() + ", quantified " +
                quantified->ranking.rank(ix).to_string() + ")",
            world_witness(Interpretation(kb.vocab, ix)));
      }
      // (c) translated rank = cost + kappa0, pointwise.
      const CostEvaluator eval(kb);
      std::optional<std::uint64_t> mismatch;
      for (std::uint64_t ix = 0; ix < open->ranking.size() && !mismatch; ++ix) {
        const Interpretation world(kb.vocab, ix);
        if (open->ranking.rank(ix) != shift(eval(world), open->kappa0)) mismatch = ix;
      }
      if (mismatch) {
        add("c:cost-rank-identity", CheckStatus::Fail, "rank differs from cost + kappa0",
            world_witness(Interpretation(kb.vocab, *mismatch)));
      } else {
        add("c:cost-rank-identity", CheckStatus::Pass,
            "rank = cost + kappa0 on all interpretations (kappa0 = " +
                std::to_string(open->kappa0) + ")");
      }
    }

    // (d) strong compatibility implies compatibility.
    if (strongly && !compatible) {
      add("d:strong-implies-compatible", CheckStatus::Fail,
          "strongly c-compatible but not c-compatible",
          statement_witness(to_string(*weak_witness)));
    } else {
      add("d:strong-implies-compatible", CheckStatus::Pass,
          std::string("strongly c-compatible = ") + (strongly ? "true" : "false") +
              ", c-compatible = " + (compatible ? "true" : "false"));
    }

    // (e) compatibility iff the corresponding translation is a model.
    if (!translated_ok) {
      not_applicable({"e:compatibility-iff-modelhood"}, translation_error);
    } else {
      const bool quantified_model =
          is_model(quantified->ranking, quantified->kb, SatisfactionMode::Strict);
      const bool open_model = is_model(open->ranking, open->kb, SatisfactionMode::Strict);
      const bool ok = (strongly == quantified_model) && (compatible == open_model);
      std::string details = std::string("strong=") + (strongly ? "t" : "f") +
                            " quantified-model=" + (quantified_model ? "t" : "f") +
                            ", compatible=" + (compatible ? "t" : "f") +
                            " open-model=" + (open_model ? "t" : "f");
      if (!compatible && weak_witness)
        details += "; compatibility fails at '" + to_string(*weak_witness) + "'";
      add("e:compatibility-iff-modelhood", ok ? CheckStatus::Pass : CheckStatus::Fail, details,
          ok ? std::nullopt
             : std::make_optional(statement_witness(
                   weak_witness ? to_string(*weak_witness)
                                : (strong_witness ? to_string(*strong_witness) : ""))));
      if (full_mode_info_) {
        const bool open_model_full = is_model(open->ranking, open->kb, SatisfactionMode::Full);
        add("e:open-modelhood-full-mode",
            open_model_full ? CheckStatus::Pass : CheckStatus::Fail,
            "informational: open translation modelhood under full satisfaction", std::nullopt,
            true);
      }
    }

    // (f) Round trip: weighted -> defeasible -> weighted.
    if (!translated_ok) {
      not_applicable({"f:round-trip"}, translation_error);
    } else if (!compatible) {
      add("f:round-trip", CheckStatus::NotApplicable,
          "not c-compatible; the open translation is not a c-representation");
    } else {
      std::vector<std::uint64_t> etas;
      for (const auto& e : open->kb.dbox) etas.push_back(*e.impact);
      const WeightedKb back = to_wkb(open->kb, etas);
      bool ok = equivalent(back, kb);
      std::string details = ok ? "weighted translation of the open translation equals the input"
                               : "round-tripped knowledge base differs";
      if (ok) {
        const CRepTranslation again = open_translation(back, bit_budget_);
        if (again.ranking != open->ranking) {
          ok = false;
          details = "re-translated ranking differs from the original translation";
        } else {
          details += "; re-translated ranking agrees pointwise";
        }
      }
      add("f:round-trip", ok ? CheckStatus::Pass : CheckStatus::Fail, details,
          ok ? std::nullopt : std::make_optional(Witness{Witness::Kind::Text, render(back)}));
    }

    // (h)/(i) classical entailment bridges; scoped to strongly c-compatible
    // inputs, matching the blanket assumption under which they are stated.
    std::vector<Statement> own;
    for (const auto& t : kb.tbox) own.push_back(t.gci);
    for (const auto& a : kb.abox)
      own.push_back(std::visit([](const auto& x) { return Statement(x); }, a.assertion));
    if (!translated_ok || !strongly) {
      const std::string why =
          translated_ok ? "requires a strongly c-compatible input" : translation_error;
      not_applicable({"h:optc-bridge", "i:optp-bridge"}, why);
    } else {
      const auto queries = classical_query_set(kb.vocab, own);
      std::optional<Statement> h_bad;
      for (const auto& q : queries) {
        const bool cost_side = entails(kb, EntailmentMode::OptCertain, std::nullopt, q, bit_budget_);
        const bool rank_side = satisfies_classical(open->ranking, q);
        if (cost_side != rank_side) {
          h_bad = q;
          break;
        }
      }
      if (h_bad) {
        add("h:optc-bridge", CheckStatus::Fail,
            "optimal-certain entailment and rank-0 satisfaction disagree",
            statement_witness(to_string(*h_bad)));
      } else {
        add("h:optc-bridge", CheckStatus::Pass,
            "agreement on " + std::to_string(queries.size()) + " queries");
      }

      std::optional<Statement> i_bad;
      std::size_t i_count = 0;
      for (const auto& q : queries) {
        if (const auto* ca = std::get_if<ConceptAssertion>(&q)) {
          ++i_count;
          const bool possible =
              entails(kb, EntailmentMode::OptPossible, std::nullopt, q, bit_budget_);
          const bool refuted = satisfies_classical(
              open->ranking, ConceptAssertion{ca->individual, ConceptExpr::negation(ca->expr)});
          if (possible != !refuted) {
            i_bad = q;
            break;
          }
        } else if (const auto* g = std::get_if<Gci>(&q)) {
          ++i_count;
          const bool possible =
              entails(kb, EntailmentMode::OptPossible, std::nullopt, q, bit_budget_);
          bool none_forced = true;
          for (const auto& a : kb.vocab.individual_names()) {
            if (satisfies_classical(
                    open->ranking,
                    ConceptAssertion{
                        a, ConceptExpr::conjunction(g->lhs, ConceptExpr::negation(g->rhs))})) {
              none_forced = false;
              break;
            }
          }
          if (possible != none_forced) {
            i_bad = q;
            break;
          }
        }
      }
      if (i_bad) {
        add("i:optp-bridge", CheckStatus::Fail,
            "optimal-possible entailment and negated rank-0 satisfaction disagree",
            statement_witness(to_string(*i_bad)));
      } else {
        add("i:optp-bridge", CheckStatus::Pass,
            "agreement on " + std::to_string(i_count) + " queries");
      }
    }

    // (j) open-inclusion entailment against bounded-cost possibility.
    if (!translated_ok || !compatible) {
      not_applicable({"j:dci-k-bridge"},
                     translated_ok ? "requires a c-compatible input" : translation_error);
    } else {
      std::vector<std::uint64_t> etas;
      for (const auto& e : open->kb.dbox) etas.push_back(*e.impact);
      check_j("j:dci-k-bridge", open->kb, etas, open->ranking);
    }

    // (k) bounded-family bridge.
    if (!translated_ok) {
      not_applicable({"k:bounded-family-bridge"}, translation_error);
    } else {
      check_k("k:bounded-family-bridge", open->kb, own, compatible ? &kb : nullptr);
    }

    reorder_letters();
  }

  // --- defeasible input -----------------------------------------------------

  void defeasible(const DefeasibleKb& kb) {
    kb.validate();
    not_applicable({"b:translation-rankings-agree", "c:cost-rank-identity",
                    "d:strong-implies-compatible", "e:compatibility-iff-modelhood",
                    "g:strict-abox-cost-preservation", "h:optc-bridge", "i:optp-bridge"},
                   "applies to weighted inputs");

    // With an unsatisfiable strict part no ranking function exists at all.
    {
      const CompiledStrictPart strict(kb);
      const std::uint64_t n = interpretation_count(kb.vocab, bit_budget_);
      bool satisfiable = false;
      std::vector<std::uint64_t> stack;
      for (std::uint64_t ix = 0; ix < n && !satisfiable; ++ix)
        satisfiable = strict.holds(Interpretation(kb.vocab, ix), stack);
      if (!satisfiable) {
        not_applicable({"modelhood", "a:cost-identity", "f:round-trip", "j:dci-k-bridge",
                        "k:bounded-family-bridge"},
                       "the strict part T u A has no Herbrand model");
        reorder_letters();
        return;
      }
    }

    // Candidate impact vectors: the annotated one when complete, otherwise
    // every model found by bounded search.
    std::vector<std::vector<std::uint64_t>> candidates;
    const bool from_hints = std::all_of(kb.dbox.begin(), kb.dbox.end(),
                                        [](const DboxEntry& e) { return e.impact.has_value(); });
    std::string candidate_origin;
    if (from_hints) {
      std::vector<std::uint64_t> eta;
      for (const auto& e : kb.dbox) eta.push_back(*e.impact);
      candidates.push_back(std::move(eta));
      candidate_origin = "annotated impact factors";
    } else {
      for (auto& found : find_c_representations(kb, budget_, bit_budget_))
        candidates.push_back(std::move(found.eta));
      candidate_origin = "bounded search (eta_max = " + std::to_string(budget_.eta_max) + ")";
    }

    if (candidates.empty()) {
      not_applicable({"modelhood", "a:cost-identity", "f:round-trip", "j:dci-k-bridge"},
                     "no candidate c-representation within bound");
      check_k("k:bounded-family-bridge", kb, own_statements(kb), nullptr);
      reorder_letters();
      return;
    }

    CheckResult model_check{"modelhood", CheckStatus::Pass, candidate_origin, std::nullopt, false};
    CheckResult a_check{"a:cost-identity", CheckStatus::Pass, "", std::nullopt, false};
    CheckResult f_check{"f:round-trip", CheckStatus::Pass, "", std::nullopt, false};
    std::vector<std::pair<std::vector<std::uint64_t>, CRepresentation>> models;

    for (const auto& eta : candidates) {
      const CRepresentation crep = build(kb, eta, std::nullopt, budget_.mode, bit_budget_);

      // modelhood
      const bool model = is_model(crep.ranking(), kb, SatisfactionMode::Strict);
      if (model) {
        models.emplace_back(eta, crep);
        model_check.details += "; " + eta_text(eta) + ": model";
      } else {
        model_check.status = CheckStatus::Fail;
        std::string witness_text;
        for (const auto& e : kb.dbox) {
          if (!satisfies_dbox_entry(crep.ranking(), e, SatisfactionMode::Strict)) {
            witness_text = to_string(e);
            break;
          }
        }
        model_check.details += "; " + eta_text(eta) + ": not a model";
        if (!model_check.witness && !witness_text.empty())
          model_check.witness = statement_witness(witness_text);
      }
      if (full_mode_info_) {
        const bool full = is_model(crep.ranking(), kb, SatisfactionMode::Full);
        add("modelhood-full-mode " + eta_text(eta), full ? CheckStatus::Pass : CheckStatus::Fail,
            "informational: modelhood under full satisfaction", std::nullopt, true);
      }

      // (a) Prop 4: the weighted translation's costs mirror the ranking.
      const WeightedKb wkb = to_wkb(kb, eta);
      const CostEvaluator eval(wkb);
      std::optional<std::uint64_t> mismatch;
      for (std::uint64_t ix = 0; ix < crep.ranking().size() && !mismatch; ++ix) {
        const Interpretation world(kb.vocab, ix);
        if (eval(world) != shift(crep.ranking().rank(ix), -crep.kappa0())) mismatch = ix;
      }
      if (mismatch) {
        a_check.status = CheckStatus::Fail;
        a_check.details += "; " + eta_text(eta) + ": cost differs from rank - kappa0";
        if (!a_check.witness)
          a_check.witness = world_witness(Interpretation(kb.vocab, *mismatch));
      } else {
        a_check.details += "; " + eta_text(eta) + ": cost = rank - kappa0 on all " +
                           std::to_string(crep.ranking().size()) + " interpretations";
      }

      // (f) second half: the open translation of the weighted translation
      // reproduces the ranking pointwise.
      const CRepTranslation back = open_translation(wkb, bit_budget_);
      if (back.ranking != crep.ranking()) {
        f_check.status = CheckStatus::Fail;
        f_check.details += "; " + eta_text(eta) + ": re-translated ranking differs";
        std::uint64_t ix = 0;
        while (back.ranking.rank(ix) == crep.ranking().rank(ix)) ++ix;
        if (!f_check.witness) f_check.witness = world_witness(Interpretation(kb.vocab, ix));
      } else {
        f_check.details += "; " + eta_text(eta) + ": ranking reproduced pointwise";
      }
    }
    strip_leading(model_check.details);
    strip_leading(a_check.details);
    strip_leading(f_check.details);
    report_.checks.push_back(std::move(model_check));
    report_.checks.push_back(std::move(a_check));
    report_.checks.push_back(std::move(f_check));

    // (j) per model candidate.
    if (models.empty()) {
      not_applicable({"j:dci-k-bridge"}, "no candidate is a model of the knowledge base");
    } else {
      const auto& [eta, crep] = models.front();
      check_j("j:dci-k-bridge", kb, eta, crep.ranking());
    }

    // (k) over the bounded family.
    check_k("k:bounded-family-bridge", kb, own_statements(kb), nullptr);
    reorder_letters();
  }

  static std::vector<Statement> own_statements(const DefeasibleKb& kb) {
    std::vector<Statement> own;
    for (const auto& g : kb.tbox) own.push_back(g);
    for (const auto& a : kb.abox)
      own.push_back(std::visit([](const auto& x) { return Statement(x); }, a));
    return own;
  }

  static void strip_leading(std::string& s) {
    if (s.rfind("; ", 0) == 0) s.erase(0, 2);
  }

  // Prop 13 shape: kappa-entailment of an open inclusion iff, at some finite
  // cost bound k, a verifying instance is possible and no falsifying instance
  // is.  k ranges over the attained finite costs of the weighted translation.
  void check_j(const char* name, const DefeasibleKb& kb, const std::vector<std::uint64_t>& eta,
               const RankingFunction& ranking) {
    const WeightedKb wkb = to_wkb(kb, eta);
    const CostEvaluator eval(wkb);
    const std::uint64_t n = interpretation_count(kb.vocab, bit_budget_);
    std::vector<ExtendedNat> costs(n, ExtendedNat::infinity());
    std::vector<std::uint64_t> attained;
    for (std::uint64_t ix = 0; ix < n; ++ix) {
      costs[ix] = eval(Interpretation(kb.vocab, ix));
      if (costs[ix].is_finite()) attained.push_back(costs[ix].value());
    }
    std::sort(attained.begin(), attained.end());
    attained.erase(std::unique(attained.begin(), attained.end()), attained.end());

    const auto queries = dci_query_set(kb.vocab, kb.dbox);
    std::vector<std::uint64_t> stack;
    for (const auto& dci : queries) {
      const bool rank_side = satisfies_dci(ranking, dci, SatisfactionMode::Strict);

      const CompiledConcept verifying(ConceptExpr::conjunction(dci.lhs, dci.rhs), kb.vocab);
      const CompiledConcept falsifying(
          ConceptExpr::conjunction(dci.lhs, ConceptExpr::negation(dci.rhs)), kb.vocab);
      ExtendedNat min_verifying = ExtendedNat::infinity();
      ExtendedNat min_falsifying = ExtendedNat::infinity();
      for (std::uint64_t ix = 0; ix < n; ++ix) {
        const Interpretation world(kb.vocab, ix);
        if (verifying.evaluate(world, stack) != 0) min_verifying = min(min_verifying, costs[ix]);
        if (falsifying.evaluate(world, stack) != 0) min_falsifying = min(min_falsifying, costs[ix]);
      }
      bool cost_side = false;
      for (std::uint64_t k : attained) {
        const bool some_verifying = min_verifying <= ExtendedNat(k);
        const bool no_falsifying = !(min_falsifying <= ExtendedNat(k));
        if (some_verifying && no_falsifying) {
          cost_side = true;
          break;
        }
      }
      if (rank_side != cost_side) {
        add(name, CheckStatus::Fail,
            std::string("kappa-entailment and the bounded-cost characterization disagree (") +
                (rank_side ? "rank yes, cost no" : "rank no, cost yes") + ")",
            statement_witness(to_string(dci)));
        return;
      }
    }
    add(name, CheckStatus::Pass, "agreement on " + std::to_string(queries.size()) + " queries");
  }

  // Prop 14 over the bounded family; for a c-compatible weighted original,
  // also the skeptical-inference consequence.
  void check_k(const char* name, const DefeasibleKb& kb, const std::vector<Statement>& own,
               const WeightedKb* original) {
    std::vector<EtaAssignment> family;
    try {
      family = find_c_representations(kb, budget_, bit_budget_);
    } catch (const UnsatisfiableStrictPartError& e) {
      add(name, CheckStatus::NotApplicable, e.what());
      return;
    }
    if (family.empty()) {
      add(name, CheckStatus::WithinBound,
          "no c-representation within bound (eta_max = " + std::to_string(budget_.eta_max) +
              "); family checks are vacuous");
      return;
    }
    std::vector<CRepresentation> creps;
    std::vector<WeightedKb> wkbs;
    for (const auto& assignment : family) {
      creps.push_back(build(kb, assignment.eta, assignment.kappa0, budget_.mode, bit_budget_));
      wkbs.push_back(to_wkb(kb, assignment.eta));
    }
    const auto queries = classical_query_set(kb.vocab, own);
    std::size_t unresolved = 0;
    for (const auto& q : queries) {
      bool all_rank = true, some_rank = false;
      bool all_cost = true, some_cost = false;
      for (std::size_t i = 0; i < creps.size(); ++i) {
        const bool rank_side = kappa_entails(creps[i], q);
        const bool cost_side =
            entails(wkbs[i], EntailmentMode::OptCertain, std::nullopt, q, bit_budget_);
        all_rank &= rank_side;
        some_rank |= rank_side;
        all_cost &= cost_side;
        some_cost |= cost_side;
      }
      if (all_rank != all_cost || some_rank != some_cost) {
        add(name, CheckStatus::Fail,
            "family-level entailment moved across the translation",
            statement_witness(to_string(q)));
        return;
      }
      if (original != nullptr && all_rank &&
          !entails(*original, EntailmentMode::OptCertain, std::nullopt, q, bit_budget_))
        ++unresolved;
    }
    std::string details = "skeptical/credulous agreement over " +
                          std::to_string(family.size()) + " c-representations and " +
                          std::to_string(queries.size()) + " queries";
    if (original != nullptr)
      details += "; skeptical => optimal-certain consequence: " + std::to_string(unresolved) +
                 " unresolved at this bound";
    add(name, CheckStatus::WithinBound, details);
  }

  // The fixed report order: modelhood first, then (a)..(k); informational
  // entries trail.
  void reorder_letters() {
    auto rank = [](const CheckResult& c) -> int {
      if (c.informational) return 100;
      if (c.name.rfind("modelhood", 0) == 0) return 0;
      if (!c.name.empty() && c.name[0] >= 'a' && c.name[0] <= 'k' && c.name.size() > 1 &&
          c.name[1] == ':')
        return 1 + (c.name[0] - 'a');
      return 50;
    };
    std::stable_sort(report_.checks.begin(), report_.checks.end(),
                     [&](const CheckResult& x, const CheckResult& y) { return rank(x) < rank(y); });
  }

  SearchBudget budget_;
  int bit_budget_;
  bool full_mode_info_;
  VerificationReport report_;
};

}  // namespace

VerificationReport verify_instance(const ParsedKb& input, const SearchBudget& budget,
                                   int bit_budget, bool full_mode_info) {
  return ReportBuilder(budget, bit_budget, full_mode_info).run(input);
}

}  // namespace alcor
