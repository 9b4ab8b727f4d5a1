#include "lucky13/replay.hpp"

#include <algorithm>

#include "lucky13/error.hpp"

namespace lucky13 {

ReplayFile replay_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("replay must be a JSON object");
  if (!j.contains("profile")) throw InvalidInput("replay is missing 'profile'");
  if (!j.contains("bet")) throw InvalidInput("replay is missing 'bet'");
  ReplayFile r;
  r.profile = profile_from_json(j.at("profile"));
  r.bet = bet_from_json(j.at("bet"));
  if (j.contains("reveals")) {
    if (!j.at("reveals").is_array()) throw InvalidInput("'reveals' must be an array");
    for (const auto& item : j.at("reveals")) r.reveals.push_back(reveal_from_json(item));
  }
  if (j.contains("offers")) {
    if (!j.at("offers").is_array()) throw InvalidInput("'offers' must be an array");
    for (const auto& item : j.at("offers")) {
      if (!item.is_object() || !item.contains("after_reveal") || !item.contains("amount") ||
          !item.at("after_reveal").is_number_integer() || !item.at("amount").is_number()) {
        throw InvalidInput("offer needs integer 'after_reveal' and numeric 'amount'");
      }
      r.offers.push_back({item.at("after_reveal").get<int>(), item.at("amount").get<double>()});
    }
  }
  return r;
}

Json to_json(const ReplayFile& replay) {
  Json reveals = Json::array();
  for (const auto& r : replay.reveals) reveals.push_back(to_json(r));
  Json offers = Json::array();
  for (const auto& o : replay.offers) offers.push_back({{"after_reveal", o.after_reveal}, {"amount", o.amount}});
  return {{"profile", to_json(replay.profile)},
          {"bet", to_json(replay.bet)},
          {"reveals", reveals},
          {"offers", offers}};
}

ReplayFile load_replay(const std::filesystem::path& path) {
  return replay_from_json(parse_json_file(path));
}

ReplayResult run_replay(const ReplayFile& replay, const std::optional<Bet>& bet_override) {
  auto offers = replay.offers;
  std::stable_sort(offers.begin(), offers.end(),
                   [](const auto& a, const auto& b) { return a.after_reveal < b.after_reveal; });
  for (const auto& o : offers) {
    if (o.after_reveal < 0 || o.after_reveal > static_cast<int>(replay.reveals.size())) {
      throw InvalidInput("offer after_reveal " + std::to_string(o.after_reveal) +
                         " does not match the recorded reveals");
    }
  }

  auto state = GameState::new_game(replay.profile, bet_override.value_or(replay.bet));
  std::vector<EvaluatedOffer> evaluated;
  auto next_offer = offers.begin();
  auto flush_offers = [&] {
    while (next_offer != offers.end() && next_offer->after_reveal == state.reveal_count()) {
      auto outcome = state.evaluate_offer(next_offer->amount);
      evaluated.push_back({next_offer->after_reveal, outcome.evaluation});
      state = std::move(outcome.state);
      ++next_offer;
    }
  };
  flush_offers();
  for (const auto& r : replay.reveals) {
    state = state.reveal(r.question, r.correct);
    flush_offers();
  }
  auto trajectory = state.trajectory();
  return {std::move(state), std::move(trajectory), std::move(evaluated)};
}

}  // namespace lucky13
