#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "lucky13/json_io.hpp"
#include "lucky13/tracker.hpp"

namespace lucky13 {

struct OfferRequest {
  int after_reveal = 0;
  double amount = 0.0;
};

// A recorded game: profile, bet, reveal order and the offers made.
struct ReplayFile {
  QuestionProfile profile = QuestionProfile::from_counts(0, 0, 13);
  Bet bet;
  std::vector<Reveal> reveals;
  std::vector<OfferRequest> offers;
};

ReplayFile replay_from_json(const Json& j);
Json to_json(const ReplayFile& replay);
ReplayFile load_replay(const std::filesystem::path& path);

struct EvaluatedOffer {
  int after_reveal = 0;
  OfferEvaluation evaluation;
};

struct ReplayResult {
  GameState state;
  std::vector<TrajectoryPoint> trajectory;
  std::vector<EvaluatedOffer> offers;
};

// Plays the reveals in order, evaluating each offer once `after_reveal`
// answers are out. With `bet_override` the same history is replayed under
// that bet instead.
ReplayResult run_replay(const ReplayFile& replay, const std::optional<Bet>& bet_override = {});

}  // namespace lucky13
