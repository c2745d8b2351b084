#include "alcor/json_io.hpp"

#include "alcor/errors.hpp"

namespace alcor {

nlohmann::json rank_to_json(ExtendedNat r) {
  if (r.is_infinite()) return "inf";
  return r.value();
}

ExtendedNat rank_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtendedNat::infinity();
    throw ValidationError("rank must be a non-negative integer or \"inf\"");
  }
  if (!j.is_number_unsigned())
    throw ValidationError("rank must be a non-negative integer or \"inf\"");
  return ExtendedNat(j.get<std::uint64_t>());
}

nlohmann::json ranking_to_json(const RankingFunction& rf) {
  nlohmann::json out = nlohmann::json::array();
  for (std::uint64_t ix = 0; ix < rf.size(); ++ix) {
    nlohmann::json entry;
    entry["interpretation"] =
        nlohmann::json::parse(to_literal(Interpretation(rf.vocab(), ix)));
    entry["rank"] = rank_to_json(rf.rank(ix));
    out.push_back(std::move(entry));
  }
  return out;
}

RankingFunction ranking_from_json(const nlohmann::json& j, const Vocabulary& vocab,
                                  int bit_budget) {
  if (!j.is_array()) throw ValidationError("a rank table must be a JSON array");
  const std::uint64_t n = interpretation_count(vocab, bit_budget);
  std::vector<ExtendedNat> table(n, ExtendedNat::infinity());
  std::vector<bool> seen(n, false);
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("interpretation") || !entry.contains("rank"))
      throw ValidationError("rank table entries need \"interpretation\" and \"rank\"");
    const Interpretation world = from_literal(entry["interpretation"].dump(), vocab);
    const std::uint64_t ix = world.bits();
    if (seen[ix])
      throw ValidationError("duplicate interpretation in rank table: " + to_literal(world));
    seen[ix] = true;
    table[ix] = rank_from_json(entry["rank"]);
  }
  std::uint64_t missing = 0;
  for (bool s : seen)
    if (!s) ++missing;
  if (missing > 0)
    throw ValidationError("rank table must cover every interpretation (" +
                          std::to_string(missing) + " of " + std::to_string(n) + " missing)");
  return RankingFunction(vocab, std::move(table));
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json out;
  switch (w.kind) {
    case Witness::Kind::Interpretation:
      out["interpretation"] = nlohmann::json::parse(w.value);
      break;
    case Witness::Kind::Statement:
      out["statement"] = w.value;
      break;
    case Witness::Kind::Text:
      out["text"] = w.value;
      break;
  }
  return out;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry;
    entry["name"] = c.name;
    entry["status"] = to_string(c.status);
    entry["details"] = c.details;
    entry["witness"] = c.witness ? witness_to_json(*c.witness) : nlohmann::json(nullptr);
    if (c.informational) entry["informational"] = true;
    checks.push_back(std::move(entry));
  }
  nlohmann::json out;
  out["checks"] = std::move(checks);
  out["all_passed"] = report.all_passed();
  return out;
}

}  // namespace alcor
