#include "alcor/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "alcor/bridge.hpp"
#include "alcor/json_io.hpp"
#include "alcor/parser.hpp"
#include "alcor/render.hpp"

namespace alcor {

namespace {

struct GlobalOptions {
  bool json = false;
  int bit_budget = kDefaultBitBudget;
  bool mode_b = false;
  std::uint64_t seed = 0;

  SatisfactionMode mode() const {
    return mode_b ? SatisfactionMode::Full : SatisfactionMode::Strict;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParsedKb load_kb(const std::string& path) { return parse_document(slurp(path)); }

const WeightedKb& as_weighted(const ParsedKb& kb, const char* command) {
  if (const auto* w = std::get_if<WeightedKb>(&kb)) return *w;
  throw ValidationError(std::string(command) +
                        " requires a weighted knowledge base (no dbox block)");
}

const DefeasibleKb& as_defeasible(const ParsedKb& kb, const char* command) {
  if (const auto* d = std::get_if<DefeasibleKb>(&kb)) return *d;
  throw ValidationError(std::string(command) +
                        " requires a defeasible knowledge base (a dbox block)");
}

std::vector<std::uint64_t> parse_eta_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(item);
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw ValidationError("--eta expects a comma-separated list of non-negative integers");
    }
  }
  return out;
}

// eta from the flag when given, otherwise from complete DBox annotations.
std::vector<std::uint64_t> resolve_eta(const DefeasibleKb& kb, const std::string& flag) {
  if (!flag.empty()) return parse_eta_list(flag);
  std::vector<std::uint64_t> eta;
  for (const auto& e : kb.dbox) {
    if (!e.impact)
      throw ValidationError("--eta required: DBox entry '" + to_string(e) +
                            "' has no impact annotation");
    eta.push_back(*e.impact);
  }
  return eta;
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

// --- subcommand bodies ------------------------------------------------------

int cmd_parse(const GlobalOptions& g, const std::string& file, std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const bool weighted = std::holds_alternative<WeightedKb>(kb);
  const std::string document = render(kb);
  if (g.json) {
    const Vocabulary& v = vocab_of(kb);
    nlohmann::json j;
    j["command"] = "parse";
    j["kind"] = weighted ? "weighted" : "defeasible";
    j["vocabulary"]["concepts"] = v.concept_names();
    j["vocabulary"]["roles"] = v.role_names();
    j["vocabulary"]["individuals"] = v.individual_names();
    if (weighted) {
      j["tbox"] = std::get<WeightedKb>(kb).tbox.size();
      j["dbox"] = nullptr;
      j["abox"] = std::get<WeightedKb>(kb).abox.size();
    } else {
      const auto& d = std::get<DefeasibleKb>(kb);
      j["tbox"] = d.tbox.size();
      j["dbox"] = d.dbox.size();
      j["abox"] = d.abox.size();
    }
    j["rendered"] = document;
    emit_json(out, j);
  } else {
    out << "kind: " << (weighted ? "weighted" : "defeasible") << "\n" << document;
  }
  return 0;
}

int cmd_models(const GlobalOptions& g, const std::string& file, std::uint64_t limit,
               std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const Vocabulary& v = vocab_of(kb);
  const std::uint64_t n = interpretation_count(v, g.bit_budget);
  nlohmann::json rows = nlohmann::json::array();
  std::uint64_t shown = 0;

  if (const auto* w = std::get_if<WeightedKb>(&kb)) {
    const CostEvaluator eval(*w);
    for (std::uint64_t ix = 0; ix < n && shown < limit; ++ix) {
      const Interpretation world(v, ix);
      const ExtendedNat c = eval(world);
      ++shown;
      if (g.json) {
        nlohmann::json row;
        row["index"] = ix;
        row["interpretation"] = nlohmann::json::parse(to_literal(world));
        row["cost"] = rank_to_json(c);
        rows.push_back(std::move(row));
      } else {
        out << ix << "  cost=" << c.to_string() << "  " << to_literal(world) << "\n";
      }
    }
  } else {
    const auto& d = std::get<DefeasibleKb>(kb);
    const CompiledStrictPart strict(d);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t ix = 0; ix < n && shown < limit; ++ix) {
      const Interpretation world(v, ix);
      if (!strict.holds(world, stack)) continue;
      ++shown;
      if (g.json) {
        nlohmann::json row;
        row["index"] = ix;
        row["interpretation"] = nlohmann::json::parse(to_literal(world));
        rows.push_back(std::move(row));
      } else {
        out << ix << "  " << to_literal(world) << "\n";
      }
    }
  }
  if (g.json) {
    nlohmann::json j;
    j["command"] = "models";
    j["interpretations"] = n;
    j["shown"] = shown;
    j["models"] = std::move(rows);
    emit_json(out, j);
  } else {
    out << "# " << shown << " of " << n << " interpretations\n";
  }
  return 0;
}

int cmd_cost(const GlobalOptions& g, const std::string& file, const std::string& world_literal,
             std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const WeightedKb& w = as_weighted(kb, "cost");
  nlohmann::json j;
  j["command"] = "cost";
  ExtendedNat value = 0;
  if (!world_literal.empty()) {
    const Interpretation world = from_literal(world_literal, w.vocab);
    value = cost(w, world);
    j["optimal"] = false;
    j["world"] = nlohmann::json::parse(to_literal(world));
  } else {
    value = optimal_cost(w, g.bit_budget);
    j["optimal"] = true;
    j["world"] = nullptr;
  }
  j["cost"] = rank_to_json(value);
  if (g.json) {
    emit_json(out, j);
  } else {
    out << (world_literal.empty() ? "optimal cost: " : "cost: ") << value.to_string() << "\n";
  }
  return 0;
}

int cmd_rank(const GlobalOptions& g, const std::string& file, const std::string& ranking_path,
             const std::string& query_text, std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const Vocabulary& v = vocab_of(kb);
  nlohmann::json table_json;
  try {
    table_json = nlohmann::json::parse(slurp(ranking_path));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid rank table: ") + e.what());
  }
  const RankingFunction rf = ranking_from_json(table_json, v, g.bit_budget);
  const Statement query = parse_statement(query_text, v);

  bool holds = false;
  nlohmann::json ranks;
  if (const auto* dci = std::get_if<Dci>(&query)) {
    holds = satisfies_dci(rf, *dci, g.mode());
    const ConceptExpr verifying = ConceptExpr::conjunction(dci->lhs, dci->rhs);
    const ConceptExpr falsifying =
        ConceptExpr::conjunction(dci->lhs, ConceptExpr::negation(dci->rhs));
    ranks["verifying"] = rank_to_json(rank_of_concept(rf, verifying));
    ranks["falsifying"] = rank_to_json(rank_of_concept(rf, falsifying));
    ranks["conditional"] = rank_to_json(rank_of_dci(rf, *dci));
  } else if (const auto* qdci = std::get_if<Qdci>(&query)) {
    holds = satisfies_qdci(rf, *qdci);
  } else {
    holds = satisfies_classical(rf, query);
    if (const auto* ca = std::get_if<ConceptAssertion>(&query))
      ranks["assertion"] = rank_to_json(rank_of_assertion(rf, ca->individual, ca->expr));
  }
  if (g.json) {
    nlohmann::json j;
    j["command"] = "rank";
    j["query"] = to_string(query);
    j["mode"] = g.mode_b ? "full" : "strict";
    j["holds"] = holds;
    j["ranks"] = std::move(ranks);
    emit_json(out, j);
  } else {
    out << "query: " << to_string(query) << "\n";
    for (const auto& [key, val] : ranks.items())
      out << key << " rank: " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    out << "holds: " << (holds ? "yes" : "no") << "\n";
  }
  return holds ? 0 : 1;
}

int cmd_entail(const GlobalOptions& g, const std::string& file, const std::string& mode_name,
               std::optional<std::uint64_t> k, const std::string& query_text, std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const WeightedKb& w = as_weighted(kb, "entail");
  EntailmentMode mode;
  if (mode_name == "kc")
    mode = EntailmentMode::KCertain;
  else if (mode_name == "kp")
    mode = EntailmentMode::KPossible;
  else if (mode_name == "optc")
    mode = EntailmentMode::OptCertain;
  else if (mode_name == "optp")
    mode = EntailmentMode::OptPossible;
  else
    throw ValidationError("--mode must be one of kc, kp, optc, optp");
  const bool bounded = mode == EntailmentMode::KCertain || mode == EntailmentMode::KPossible;
  if (bounded && !k) throw ValidationError("--k is required for modes kc and kp");
  if (!bounded && k) throw ValidationError("--k is only valid for modes kc and kp");

  const Statement query = parse_statement(query_text, w.vocab);
  if (!is_classical(query))
    throw ValidationError("entail accepts classical queries only (GCI or assertion)");
  const bool holds = entails(w, mode, k, query, g.bit_budget);

  if (g.json) {
    nlohmann::json j;
    j["command"] = "entail";
    j["mode"] = mode_name;
    j["k"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
    j["query"] = to_string(query);
    j["holds"] = holds;
    if (!bounded) j["optimal_cost"] = rank_to_json(optimal_cost(w, g.bit_budget));
    emit_json(out, j);
  } else {
    out << "query: " << to_string(query) << "\n";
    if (!bounded)
      out << "optimal cost: " << optimal_cost(w, g.bit_budget).to_string() << "\n";
    out << "holds: " << (holds ? "yes" : "no") << "\n";
  }
  return holds ? 0 : 1;
}

int cmd_crep(const GlobalOptions& g, const std::string& file, const std::string& eta_flag,
             std::optional<std::int64_t> kappa0, bool check, const std::string& entail_query,
             bool allow_zero_eta, std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const DefeasibleKb& d = as_defeasible(kb, "crep");
  const std::vector<std::uint64_t> eta = resolve_eta(d, eta_flag);
  const CRepresentation crep = build(d, eta, kappa0, g.mode(), g.bit_budget, allow_zero_eta);

  nlohmann::json j;
  j["command"] = "crep";
  j["eta"] = eta;
  j["kappa0"] = crep.kappa0();

  int code = 0;
  if (check) {
    const bool model = is_model(crep.ranking(), d, g.mode());
    j["is_c_representation"] = model;
    if (!g.json)
      out << "kappa0: " << crep.kappa0() << "\n"
          << "is a c-representation: " << (model ? "yes" : "no") << "\n";
    code = model ? 0 : 1;
  } else if (!entail_query.empty()) {
    const Statement query = parse_statement(entail_query, d.vocab);
    const bool holds = kappa_entails(crep, query);
    const bool model = is_model(crep.ranking(), d, g.mode());
    j["query"] = to_string(query);
    j["entails"] = holds;
    j["is_c_representation"] = model;
    if (!g.json) {
      out << "query: " << to_string(query) << "\n"
          << "kappa0: " << crep.kappa0() << "\n";
      if (!model) out << "note: this ranking is not a c-representation of the knowledge base\n";
      out << "entails: " << (holds ? "yes" : "no") << "\n";
    }
    code = holds ? 0 : 1;
  } else if (!g.json) {
    out << "kappa0: " << crep.kappa0() << "\n";
    for (std::uint64_t ix = 0; ix < crep.ranking().size(); ++ix) {
      const ExtendedNat r = crep.ranking().rank(ix);
      if (r.is_finite())
        out << ix << "  rank=" << r.to_string() << "  "
            << to_literal(Interpretation(d.vocab, ix)) << "\n";
    }
  }
  if (g.json) {
    j["ranking"] = ranking_to_json(crep.ranking());
    emit_json(out, j);
  }
  return code;
}

int cmd_infer(const GlobalOptions& g, const std::string& file, const std::string& quantifier_name,
              std::uint64_t eta_max, const std::string& query_text, std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const DefeasibleKb& d = as_defeasible(kb, "infer");
  InferenceQuantifier quantifier;
  if (quantifier_name == "skeptical")
    quantifier = InferenceQuantifier::Skeptical;
  else if (quantifier_name == "credulous")
    quantifier = InferenceQuantifier::Credulous;
  else
    throw ValidationError("--quantifier must be skeptical or credulous");
  const Statement query = parse_statement(query_text, d.vocab);
  const SearchBudget budget{eta_max, g.mode()};
  const InferenceResult result = c_inference(d, query, quantifier, budget, g.bit_budget);

  if (g.json) {
    nlohmann::json j;
    j["command"] = "infer";
    j["quantifier"] = quantifier_name;
    j["eta_max"] = eta_max;
    j["query"] = to_string(query);
    j["verdict"] = to_string(result.verdict);
    if (result.witness) {
      j["witness"]["eta"] = result.witness->eta;
      j["witness"]["kappa0"] = result.witness->kappa0;
    } else {
      j["witness"] = nullptr;
    }
    emit_json(out, j);
  } else {
    out << "query: " << to_string(query) << "\n"
        << "verdict: " << to_string(result.verdict) << "\n";
    if (result.witness) {
      out << "witness eta:";
      for (std::uint64_t e : result.witness->eta) out << " " << e;
      out << "  (kappa0 " << result.witness->kappa0 << ")\n";
    }
  }
  const bool positive = result.verdict == InferenceVerdict::Holds ||
                        result.verdict == InferenceVerdict::HoldsWithinBound;
  return positive ? 0 : 1;
}

int cmd_translate(const GlobalOptions& g, const std::string& file, const std::string& kind,
                  const std::string& eta_flag, const std::string& out_path, std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  nlohmann::json j;
  j["command"] = "translate";
  j["kind"] = kind;
  std::string document;

  if (kind == "to-wkb") {
    const DefeasibleKb& d = as_defeasible(kb, "translate --kind to-wkb");
    const std::vector<std::uint64_t> eta = resolve_eta(d, eta_flag);
    document = render(to_wkb(d, eta));
    j["eta"] = eta;
  } else if (kind == "strict-abox") {
    document = render(strict_abox_translation(as_weighted(kb, "translate --kind strict-abox")));
  } else if (kind == "open" || kind == "quantified") {
    const WeightedKb& w = as_weighted(kb, "translate");
    const CRepTranslation t =
        kind == "open" ? open_translation(w, g.bit_budget) : quantified_translation(w, g.bit_budget);
    document = render(t.kb);
    j["kappa0"] = t.kappa0;
    if (g.json) j["ranking"] = ranking_to_json(t.ranking);
  } else {
    throw ValidationError("--kind must be one of to-wkb, open, quantified, strict-abox");
  }

  j["document"] = document;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + out_path + "'");
    f << document;
  }
  if (g.json) {
    emit_json(out, j);
  } else {
    out << document;
  }
  return 0;
}

int cmd_check(const GlobalOptions& g, const std::string& file, const std::string& property,
              std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const WeightedKb& w = as_weighted(kb, "check");
  bool holds = false;
  std::optional<Gci> witness;
  if (property == "strict-abox") {
    holds = w.has_strict_abox();
  } else if (property == "c-compatible") {
    witness = c_compatibility_witness(w, false, g.bit_budget);
    holds = !witness.has_value();
  } else if (property == "strongly-c-compatible") {
    witness = c_compatibility_witness(w, true, g.bit_budget);
    holds = !witness.has_value();
  } else {
    throw ValidationError(
        "--property must be one of c-compatible, strongly-c-compatible, strict-abox");
  }
  if (g.json) {
    nlohmann::json j;
    j["command"] = "check";
    j["property"] = property;
    j["holds"] = holds;
    j["witness"] = witness ? nlohmann::json(to_string(*witness)) : nlohmann::json(nullptr);
    emit_json(out, j);
  } else {
    out << property << ": " << (holds ? "yes" : "no") << "\n";
    if (witness) out << "witness: " << to_string(*witness) << "\n";
  }
  return holds ? 0 : 1;
}

int cmd_verify(const GlobalOptions& g, const std::string& file, std::uint64_t eta_max,
               std::ostream& out) {
  const ParsedKb kb = load_kb(file);
  const SearchBudget budget{eta_max, SatisfactionMode::Strict};
  const VerificationReport report = verify_instance(kb, budget, g.bit_budget, g.mode_b);
  if (g.json) {
    nlohmann::json j = report_to_json(report);
    j["command"] = "verify";
    j["eta_max"] = eta_max;
    j["seed"] = g.seed;
    emit_json(out, j);
  } else {
    for (const auto& c : report.checks) {
      out << c.name << ": " << to_string(c.status);
      if (!c.details.empty()) out << " -- " << c.details;
      out << "\n";
      if (c.witness) out << "  witness: " << c.witness->value << "\n";
    }
    out << (report.all_passed() ? "all checks passed" : "some checks failed") << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOptions g;
  CLI::App app{"dual-semantics reasoner for weighted and defeasible knowledge bases"};
  app.name("reason");
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--bit-budget", g.bit_budget, "max interpretation bits (default 24)")
      ->check(CLI::Range(0, kMaxBitBudget));
  app.add_flag("--mode-b", g.mode_b, "enable the equal-rank satisfaction case for open inclusions");
  app.add_option("--seed", g.seed, "seed echoed into reports");

  std::string file, world, ranking_path, query, mode_name, eta_flag, out_path, kind, property,
      quantifier;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t eta_max = 8;
  std::optional<std::int64_t> kappa0;
  std::optional<std::uint64_t> k;
  bool check_flag = false;
  bool allow_zero_eta = false;
  std::string entail_query;

  auto* parse_cmd = app.add_subcommand("parse", "parse and echo a knowledge base");
  parse_cmd->add_option("file", file)->required();

  auto* models_cmd = app.add_subcommand("models", "enumerate interpretations");
  models_cmd->add_option("file", file)->required();
  models_cmd->add_option("--limit", limit, "stop after this many rows");

  auto* cost_cmd = app.add_subcommand("cost", "interpretation cost / optimal cost");
  cost_cmd->add_option("file", file)->required();
  cost_cmd->add_option("--world", world, "JSON world literal");

  auto* rank_cmd = app.add_subcommand("rank", "evaluate a query under an explicit rank table");
  rank_cmd->add_option("file", file)->required();
  rank_cmd->add_option("--ranking", ranking_path, "rank table JSON file")->required();
  rank_cmd->add_option("--query", query)->required();

  auto* entail_cmd = app.add_subcommand("entail", "cost-based entailment");
  entail_cmd->add_option("file", file)->required();
  entail_cmd->add_option("--mode", mode_name, "kc | kp | optc | optp")->required();
  entail_cmd->add_option("--k", k, "cost bound for kc/kp");
  entail_cmd->add_option("--query", query)->required();

  auto* crep_cmd = app.add_subcommand("crep", "build and use a c-representation");
  crep_cmd->add_option("file", file)->required();
  crep_cmd->add_option("--eta", eta_flag, "comma-separated impact factors");
  crep_cmd->add_option("--kappa0", kappa0, "expected normalization constant (validated)");
  auto* check_opt = crep_cmd->add_flag("--check", check_flag, "test modelhood");
  crep_cmd->add_option("--entail", entail_query, "statement to entail")->excludes(check_opt);
  crep_cmd->add_flag("--allow-zero-eta", allow_zero_eta, "permit zero impact factors");

  auto* infer_cmd = app.add_subcommand("infer", "skeptical / credulous c-inference");
  infer_cmd->add_option("file", file)->required();
  infer_cmd->add_option("--quantifier", quantifier, "skeptical | credulous")->required();
  infer_cmd->add_option("--eta-max", eta_max, "search bound per impact factor");
  infer_cmd->add_option("--query", query)->required();

  auto* translate_cmd = app.add_subcommand("translate", "translate between the formalisms");
  translate_cmd->add_option("file", file)->required();
  translate_cmd->add_option("--kind", kind, "to-wkb | open | quantified | strict-abox")
      ->required();
  translate_cmd->add_option("--eta", eta_flag, "impact factors for to-wkb");
  translate_cmd->add_option("-o,--output", out_path, "write the document here");

  auto* check_cmd = app.add_subcommand("check", "knowledge-base properties");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--property", property,
                        "c-compatible | strongly-c-compatible | strict-abox")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the bridge checks on an instance");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--eta-max", eta_max, "search bound per impact factor");

  try {
    // CLI11's vector overload consumes the arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(g, file, out);
    if (models_cmd->parsed()) return cmd_models(g, file, limit, out);
    if (cost_cmd->parsed()) return cmd_cost(g, file, world, out);
    if (rank_cmd->parsed()) return cmd_rank(g, file, ranking_path, query, out);
    if (entail_cmd->parsed()) return cmd_entail(g, file, mode_name, k, query, out);
    if (crep_cmd->parsed())
      return cmd_crep(g, file, eta_flag, kappa0, check_flag, entail_query, allow_zero_eta, out);
    if (infer_cmd->parsed()) return cmd_infer(g, file, quantifier, eta_max, query, out);
    if (translate_cmd->parsed()) return cmd_translate(g, file, kind, eta_flag, out_path, out);
    if (check_cmd->parsed()) return cmd_check(g, file, property, out);
    if (verify_cmd->parsed()) return cmd_verify(g, file, eta_max, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsatisfiableStrictPartError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace alcor
