#include "lucky13/json_io.hpp"

#include <fstream>
#include <string>

#include "lucky13/error.hpp"

namespace lucky13 {
namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_number(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + " must be a number");
  return j.get<double>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) throw InvalidInput(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

Json number_or_null(const std::optional<int>& n) { return n ? Json(*n) : Json(nullptr); }

}  // namespace

QuestionProfile profile_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("profile must be an object");
  if (j.contains("p")) {
    const auto& p = j.at("p");
    if (!p.is_array()) throw InvalidInput("profile 'p' must be an array");
    std::vector<double> probs;
    for (const auto& v : p) probs.push_back(as_number(v, "question probability"));
    return QuestionProfile::from_probabilities(probs);
  }
  return QuestionProfile::from_counts(as_int(require(j, "s"), "s"), as_int(require(j, "u"), "u"),
                                      as_int(require(j, "g"), "g"));
}

Json to_json(const QuestionProfile& profile) {
  if (profile.is_categorical()) {
    const auto& c = profile.counts();
    return {{"s", c.sure}, {"u", c.unsure}, {"g", c.guess}};
  }
  const auto& p = profile.probabilities();
  return {{"p", std::vector<double>(p.begin(), p.end())}};
}

Bet bet_from_json(const Json& j) {
  const auto& range_j = require(j, "range");
  if (!range_j.is_string()) throw InvalidInput("bet 'range' must be a string");
  const auto range = parse_range(range_j.get<std::string>());
  if (!range) throw InvalidInput("unknown Lucky Range '" + range_j.get<std::string>() + "'");
  std::optional<int> number;
  if (j.contains("number") && !j.at("number").is_null()) number = as_int(j.at("number"), "number");
  return make_bet(*range, number);
}

Json to_json(const Bet& bet) {
  return {{"range", std::string(to_string(bet.range))}, {"number", number_or_null(bet.number)}};
}

Reveal reveal_from_json(const Json& j) {
  Reveal r;
  if (j.is_object() && j.contains("category")) {
    const auto& c = j.at("category");
    if (!c.is_string()) throw InvalidInput("reveal 'category' must be a string");
    r.question = parse_category(c.get<std::string>());
  } else if (j.is_object() && j.contains("p")) {
    r.question = as_number(j.at("p"), "reveal 'p'");
  } else {
    throw InvalidInput("reveal needs 'category' or 'p'");
  }
  r.correct = as_bool(require(j, "correct"), "reveal 'correct'");
  return r;
}

Json to_json(const Reveal& reveal) {
  Json j;
  if (const auto* c = std::get_if<Category>(&reveal.question)) {
    j["category"] = std::string(1, category_letter(*c));
  } else {
    j["p"] = std::get<double>(reveal.question);
  }
  j["correct"] = reveal.correct;
  return j;
}

Json to_json(const Recommendation& rec) {
  Json ties = Json::array();
  for (const auto& t : rec.ties) ties.push_back(to_json(t));
  return {{"range", std::string(to_string(rec.bet.range))},
          {"number", number_or_null(rec.bet.number)},
          {"win_probability", rec.win_probability},
          {"expected_winnings", rec.expected_winnings},
          {"number_hit_probability", rec.number_hit_probability},
          {"ties", ties}};
}

Json to_json(const ModeResult& modes) { return {{"mean", modes.mean}, {"modes", modes.modes}}; }

Json to_json(const TrajectoryPoint& p) {
  return {{"reveal_index", p.reveal_index},
          {"correct_so_far", p.correct_so_far},
          {"expected_winnings", p.expected_winnings},
          {"range_prob", p.range_probability},
          {"number_prob", p.number_probability}};
}

Json to_json(const OfferEvaluation& e) {
  return {{"offer", e.offer},
          {"continuation_value", e.continuation_value},
          {"advice", to_string(e.advice)},
          {"margin", e.margin},
          {"range_prob", e.range_probability},
          {"number_prob", e.number_probability}};
}

Json to_json(const OfferRecord& r) {
  return {{"after_reveal", r.after_reveal}, {"amount", r.amount}, {"decision", to_string(r.decision)}};
}

Json to_json(const Histogram14& h) {
  Json rows = Json::array();
  for (int k = 0; k <= kQuestionCount; ++k) {
    rows.push_back({{"k", k}, {"count", h.count(k)}, {"frequency", h.frequency(k)}});
  }
  return {{"total", h.total()}, {"buckets", rows}};
}

Json to_json(const Advice& advice) {
  Json j = to_json(advice.recommendation);
  j["mean"] = advice.mean;
  if (advice.modes) j["modes"] = advice.modes->modes;
  return j;
}

namespace {

Json table_row(const CategoryCounts& c, const char* utility, const Recommendation& rec) {
  Json j = to_json(rec);
  Json row = {{"s", c.sure},
              {"u", c.unsure},
              {"g", c.guess},
              {"utility", utility},
              {"range", j["range"]},
              {"number", j["number"]},
              {"win_prob", rec.win_probability},
              {"expected_winnings", rec.expected_winnings},
              {"ties", j["ties"]}};
  return row;
}

}  // namespace

Json table_to_json(const std::vector<StrategyRow>& rows, TableUtility utility) {
  Json out = Json::array();
  for (const auto& row : rows) {
    if (utility != TableUtility::kExpectedWinnings) out.push_back(table_row(row.counts, "winprob", row.win_probability));
    if (utility != TableUtility::kWinProbability) out.push_back(table_row(row.counts, "winnings", row.expected_winnings));
  }
  return out;
}

PopulationModel population_model_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : require(j, "categories");
  if (!list.is_array()) throw InvalidInput("'categories' must be an array");
  std::vector<QuestionCategoryWeight> categories;
  for (const auto& item : list) {
    const auto& name = require(item, "name");
    if (!name.is_string()) throw InvalidInput("category 'name' must be a string");
    QuestionCategoryWeight c;
    c.name = name.get<std::string>();
    c.probability = as_number(require(item, "probability"), "category 'probability'");
    c.expertise_eligible = item.contains("expertise") ? as_bool(item.at("expertise"), "'expertise'")
                                                      : c.name != "Other";
    categories.push_back(std::move(c));
  }
  auto model = PopulationModel::from_categories(std::move(categories));
  if (j.is_object()) {
    if (j.contains("expertise_trials")) model.expertise_trials = as_int(j.at("expertise_trials"), "expertise_trials");
    if (j.contains("expertise_success_p")) model.expertise_success_p = as_number(j.at("expertise_success_p"), "expertise_success_p");
    if (j.contains("expertise_sure_p")) model.expertise_sure_p = as_number(j.at("expertise_sure_p"), "expertise_sure_p");
    if (j.contains("expertise_unsure_p")) model.expertise_unsure_p = as_number(j.at("expertise_unsure_p"), "expertise_unsure_p");
    if (j.contains("non_expert_p")) model.non_expert_p = as_number(j.at("non_expert_p"), "non_expert_p");
    if (j.contains("weighted_expertise")) model.weighted_expertise = as_bool(j.at("weighted_expertise"), "weighted_expertise");
  }
  validate(model);
  return model;
}

Json to_json(const PopulationModel& model) {
  Json cats = Json::array();
  for (const auto& c : model.categories) {
    cats.push_back({{"name", c.name}, {"probability", c.probability}, {"expertise", c.expertise_eligible}});
  }
  return {{"categories", cats},
          {"expertise_trials", model.expertise_trials},
          {"expertise_success_p", model.expertise_success_p},
          {"expertise_sure_p", model.expertise_sure_p},
          {"expertise_unsure_p", model.expertise_unsure_p},
          {"non_expert_p", model.non_expert_p},
          {"weighted_expertise", model.weighted_expertise}};
}

Json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

PopulationModel load_population_model(const std::filesystem::path& path) {
  return population_model_from_json(parse_json_file(path));
}

}  // namespace lucky13
