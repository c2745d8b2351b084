#ifndef ALCOR_JSON_IO_HPP
#define ALCOR_JSON_IO_HPP

#include <json.hpp>

#include "alcor/bridge.hpp"
#include "alcor/ranking.hpp"

namespace alcor {

// Rank tables travel as JSON arrays of {"interpretation": <world literal>,
// "rank": <n or "inf">}, one entry per interpretation.
nlohmann::json ranking_to_json(const RankingFunction&);
RankingFunction ranking_from_json(const nlohmann::json&, const Vocabulary&,
                                  int bit_budget = kDefaultBitBudget);

nlohmann::json rank_to_json(ExtendedNat);
ExtendedNat rank_from_json(const nlohmann::json&);

nlohmann::json witness_to_json(const Witness&);
nlohmann::json report_to_json(const VerificationReport&);

}  // namespace alcor

#endif  // ALCOR_JSON_IO_HPP
