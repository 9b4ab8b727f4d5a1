#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lucky13/error.hpp"
#include "lucky13/json_io.hpp"
#include "lucky13/replay.hpp"

using namespace lucky13;

TEST(JsonProfile, CountsAndProbabilitiesRoundTrip) {
  const auto counts = QuestionProfile::from_counts(3, 8, 2);
  EXPECT_EQ(profile_from_json(to_json(counts)).counts().unsure, 8);
  std::vector<double> p(13, 0.5);
  p[0] = 0.9;
  const auto probs = profile_from_json(to_json(QuestionProfile::from_probabilities(p)));
  EXPECT_FALSE(probs.is_categorical());
  EXPECT_DOUBLE_EQ(probs.probabilities()[0], 0.9);
}

TEST(JsonProfile, RejectsMalformedProfiles) {
  EXPECT_THROW(profile_from_json(Json{{"s", 7}, {"u", 7}, {"g", 0}}), InvalidInput);
  EXPECT_THROW(profile_from_json(Json{{"s", 7}, {"u", 6}}), InvalidInput);
  EXPECT_THROW(profile_from_json(Json{{"s", "7"}, {"u", 6}, {"g", 0}}), InvalidInput);
  EXPECT_THROW(profile_from_json(Json{{"p", std::vector<double>(13, 0.4)}}), InvalidInput);
  EXPECT_THROW(profile_from_json(Json{{"p", std::vector<double>(12, 0.5)}}), InvalidInput);
  EXPECT_THROW(profile_from_json(Json::array()), InvalidInput);
}

TEST(JsonBet, RoundTripAndNullNumber) {
  const Bet bet{LuckyRange::k10to12, 11};
  EXPECT_EQ(bet_from_json(to_json(bet)), bet);
  const auto thirteen = to_json(Bet{LuckyRange::k13, std::nullopt});
  EXPECT_TRUE(thirteen.at("number").is_null());
  EXPECT_EQ(thirteen.at("range"), "13");
  EXPECT_THROW(bet_from_json(Json{{"range", "13"}, {"number", 13}}), InvalidInput);
  EXPECT_THROW(bet_from_json(Json{{"range", "7-9"}, {"number", 10}}), InvalidInput);
  EXPECT_THROW(bet_from_json(Json{{"range", "14"}}), InvalidInput);
}

TEST(JsonReveal, CategoryAndProbabilityForms) {
  const auto a = reveal_from_json(Json{{"category", "u"}, {"correct", true}});
  EXPECT_EQ(std::get<Category>(a.question), Category::kUnsure);
  const auto b = reveal_from_json(Json{{"p", 0.8}, {"correct", false}});
  EXPECT_DOUBLE_EQ(std::get<double>(b.question), 0.8);
  EXPECT_FALSE(b.correct);
  EXPECT_EQ(to_json(a), (Json{{"category", "U"}, {"correct", true}}));
  EXPECT_THROW(reveal_from_json(Json{{"category", "Q"}, {"correct", true}}), InvalidInput);
  EXPECT_THROW(reveal_from_json(Json{{"category", "S"}}), InvalidInput);
}

TEST(JsonReplay, BundledFilesRoundTrip) {
  for (const char* name : {"case_b.json", "case_c.json"}) {
    const auto replay = load_replay(std::string(LUCKY13_DATA_DIR) + "/" + name);
    EXPECT_EQ(replay.reveals.size(), 13u);
    EXPECT_EQ(to_json(replay_from_json(to_json(replay))), to_json(replay));
  }
}

TEST(JsonReplay, EmptyRevealsGiveSinglePoint) {
  const auto replay = replay_from_json(Json{{"profile", {{"s", 3}, {"u", 8}, {"g", 2}}},
                                            {"bet", {{"range", "10-12"}, {"number", 11}}}});
  const auto result = run_replay(replay);
  ASSERT_EQ(result.trajectory.size(), 1u);
  EXPECT_NEAR(result.trajectory[0].expected_winnings, 68665.41, 0.01);
}

TEST(JsonReplay, OfferBeyondRevealsIsRejected) {
  auto replay = replay_from_json(Json{{"profile", {{"s", 13}, {"u", 0}, {"g", 0}}},
                                      {"bet", {{"range", "13"}}},
                                      {"offers", {{{"after_reveal", 1}, {"amount", 10}}}}});
  EXPECT_THROW(run_replay(replay), InvalidInput);
}

TEST(JsonPopulation, ExpertiseFlagDefaultsByName) {
  const auto model = population_model_from_json(
      Json::array({{{"name", "Music"}, {"probability", 0.5}}, {{"name", "Other"}, {"probability", 0.5}}}));
  ASSERT_EQ(model.categories.size(), 2u);
  EXPECT_TRUE(model.categories[0].expertise_eligible);
  EXPECT_FALSE(model.categories[1].expertise_eligible);
}

TEST(JsonFile, MissingAndMalformedFiles) {
  EXPECT_THROW(parse_json_file("/nonexistent/file.json"), std::runtime_error);
  const auto path = std::filesystem::temp_directory_path() / "lucky13_bad.json";
  std::ofstream(path) << "{not json";
  EXPECT_THROW(parse_json_file(path), InvalidInput);
  std::filesystem::remove(path);
}
