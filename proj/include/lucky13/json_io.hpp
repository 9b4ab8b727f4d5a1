#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lucky13/prob_core.hpp"
#include "lucky13/render.hpp"
#include "lucky13/simulation.hpp"
#include "lucky13/strategy.hpp"
#include "lucky13/tracker.hpp"

namespace lucky13 {

using Json = nlohmann::json;

// All parsers throw InvalidInput on malformed documents.

// {"s": int, "u": int, "g": int} or {"p": [13 numbers]}.
QuestionProfile profile_from_json(const Json& j);
Json to_json(const QuestionProfile& profile);

// {"range": "10-12", "number": 11 | null}.
Bet bet_from_json(const Json& j);
Json to_json(const Bet& bet);

// {"category": "S"|"U"|"G", "correct": bool} or {"p": number, "correct": bool}.
Reveal reveal_from_json(const Json& j);
Json to_json(const Reveal& reveal);

Json to_json(const Recommendation& rec);
Json to_json(const ModeResult& modes);
Json to_json(const TrajectoryPoint& point);
Json to_json(const OfferEvaluation& evaluation);
Json to_json(const OfferRecord& record);
Json to_json(const Histogram14& histogram);
Json to_json(const Advice& advice);

// Flat rows with the same columns as the CSV table.
Json table_to_json(const std::vector<StrategyRow>& rows, TableUtility utility);

// Categories as [{"name": str, "probability": number, "expertise": bool?}],
// either bare or under "categories" with optional scalar overrides
// (expertise_trials, expertise_success_p, expertise_sure_p,
// expertise_unsure_p, non_expert_p, weighted_expertise).
PopulationModel population_model_from_json(const Json& j);
PopulationModel load_population_model(const std::filesystem::path& path);
Json to_json(const PopulationModel& model);

Json parse_json_file(const std::filesystem::path& path);

}  // namespace lucky13
