#include "lucky13/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lucky13/error.hpp"
#include "lucky13/prob_core.hpp"

namespace lucky13 {

UtilityFunction UtilityFunction::custom(Mapping mapping) {
  if (!mapping) throw InvalidInput("custom utility needs a mapping");
  return UtilityFunction(Kind::kCustom, std::move(mapping));
}

double UtilityFunction::operator()(double dollars) const {
  switch (kind_) {
    case Kind::kWinProbability:
      return dollars > 0.0 ? 1.0 : 0.0;
    case Kind::kExpectedWinnings:
      return dollars;
    case Kind::kCustom:
      return mapping_(dollars);
  }
  return 0.0;
}

std::vector<double> attainable_payoffs(const PrizeSchedule& schedule) {
  std::set<double> levels{0.0, schedule.number_bonus()};
  for (LuckyRange r : kAllRanges) {
    levels.insert(schedule.prize(r));
    if (r != LuckyRange::k13) levels.insert(schedule.prize(r) + schedule.number_bonus());
  }
  return {levels.begin(), levels.end()};
}

void validate_utility(const UtilityFunction& utility, const PrizeSchedule& schedule) {
  double previous = -INFINITY;
  for (double dollars : attainable_payoffs(schedule)) {
    const double u = utility(dollars);
    if (!std::isfinite(u)) throw InvalidInput("utility is not finite at an attainable payoff");
    if (u < previous) throw InvalidInput("utility must be non-decreasing in dollars");
    previous = u;
  }
}

double payoff(const Bet& bet, int correct, const PrizeSchedule& schedule) {
  validate_bet(bet);
  if (!range_bounds(bet.range).contains(correct)) return 0.0;
  double dollars = schedule.prize(bet.range);
  if (bet.number && *bet.number == correct) dollars += schedule.number_bonus();
  return dollars;
}

double expected_winnings(const Pmf13& pmf, const Bet& bet, const PrizeSchedule& schedule) {
  validate_bet(bet);
  double ew = schedule.prize(bet.range) * range_probability(pmf, bet.range);
  if (bet.number) ew += schedule.number_bonus() * pmf[*bet.number];
  return ew;
}

double expected_utility(const Pmf13& pmf, const Bet& bet, const UtilityFunction& utility,
                        const PrizeSchedule& schedule) {
  validate_bet(bet);
  const double in_range = range_probability(pmf, bet.range);
  const double hit = bet.number ? pmf[*bet.number] : 0.0;
  const double prize = schedule.prize(bet.range);
  return utility(0.0) * (1.0 - in_range) + utility(prize) * (in_range - hit) +
         utility(prize + schedule.number_bonus()) * hit;
}

std::vector<Bet> all_number_bets() {
  std::vector<Bet> bets;
  for (LuckyRange r : kAllRanges) {
    if (r == LuckyRange::k13) {
      bets.push_back({r, std::nullopt});
      continue;
    }
    const auto b = range_bounds(r);
    for (int n = b.low; n <= b.high; ++n) bets.push_back({r, n});
  }
  return bets;
}

namespace {

Recommendation describe(const Pmf13& pmf, const Bet& bet, const PrizeSchedule& schedule) {
  Recommendation rec;
  rec.bet = bet;
  rec.win_probability = range_probability(pmf, bet.range);
  rec.expected_winnings = expected_winnings(pmf, bet, schedule);
  rec.number_hit_probability = bet.number ? pmf[*bet.number] : 0.0;
  return rec;
}

// Strict preference between two equally scored bets: higher-prize range,
// then the number nearer the PMF mean, then the higher number.
bool preferred_on_tie(const Bet& a, const Bet& b, double mean) {
  if (a.range != b.range) return range_index(a.range) > range_index(b.range);
  if (!a.number || !b.number) return false;
  const double da = std::abs(*a.number - mean);
  const double db = std::abs(*b.number - mean);
  if (std::abs(da - db) > 1e-9) return da < db;
  return *a.number > *b.number;
}

struct Scored {
  Bet bet;
  double score;
};

// Picks the best-scoring bet; ties are ordered by preferred_on_tie.
Recommendation pick(const Pmf13& pmf, std::vector<Scored> candidates, const PrizeSchedule& schedule) {
  double best = candidates.front().score;
  for (const auto& c : candidates) best = std::max(best, c.score);
  std::vector<Bet> tied;
  for (const auto& c : candidates) {
    if (nearly_equal(c.score, best)) tied.push_back(c.bet);
  }
  const double mean = pmf.mean();
  std::stable_sort(tied.begin(), tied.end(),
                   [mean](const Bet& a, const Bet& b) { return preferred_on_tie(a, b, mean); });
  auto rec = describe(pmf, tied.front(), schedule);
  rec.ties.assign(tied.begin() + 1, tied.end());
  return rec;
}

// Range chosen by score alone; every in-range mode of a tied range is a candidate.
Recommendation two_stage(const Pmf13& pmf, const PrizeSchedule& schedule, bool weigh_by_prize) {
  std::vector<Scored> candidates;
  for (LuckyRange r : kAllRanges) {
    double score = range_probability(pmf, r);
    if (weigh_by_prize) score *= schedule.prize(r);
    if (r == LuckyRange::k13) {
      candidates.push_back({{r, std::nullopt}, score});
      continue;
    }
    for (int n : mode_in_range(pmf, r).tied) candidates.push_back({{r, n}, score});
  }
  return pick(pmf, std::move(candidates), schedule);
}

}  // namespace

Recommendation recommend(const Pmf13& pmf, const UtilityFunction& utility,
                         const PrizeSchedule& schedule) {
  switch (utility.kind()) {
    case UtilityFunction::Kind::kWinProbability:
      return two_stage(pmf, schedule, false);
    case UtilityFunction::Kind::kExpectedWinnings:
      return two_stage(pmf, schedule, true);
    case UtilityFunction::Kind::kCustom:
      break;
  }
  validate_utility(utility, schedule);
  std::vector<Scored> candidates;
  for (const auto& bet : all_number_bets()) {
    candidates.push_back({bet, expected_utility(pmf, bet, utility, schedule)});
  }
  return pick(pmf, std::move(candidates), schedule);
}

Recommendation joint_recommend(const Pmf13& pmf, const PrizeSchedule& schedule) {
  std::vector<Scored> candidates;
  for (const auto& bet : all_number_bets()) {
    candidates.push_back({bet, expected_winnings(pmf, bet, schedule)});
  }
  return pick(pmf, std::move(candidates), schedule);
}

std::optional<UtilityFunction> parse_utility(std::string_view name) {
  if (name == "winprob") return UtilityFunction::win_probability();
  if (name == "winnings") return UtilityFunction::expected_winnings();
  return std::nullopt;
}

Advice advise(const QuestionProfile& profile, const UtilityFunction& utility, bool joint) {
  const auto pmf = exact_pmf(profile);
  Advice a;
  a.recommendation = joint ? joint_recommend(pmf) : recommend(pmf, utility);
  a.mean = profile.mean();
  if (!profile.is_categorical()) a.modes = darroch_mode(profile.probabilities());
  return a;
}

namespace {

StrategyRow make_row(const CategoryCounts& counts) {
  const auto pmf = category_pmf(counts);
  return {counts, recommend(pmf, UtilityFunction::win_probability()),
          recommend(pmf, UtilityFunction::expected_winnings())};
}

}  // namespace

std::vector<StrategyRow> strategy_table_two_category() {
  std::vector<StrategyRow> rows;
  for (int s = 0; s <= kQuestionCount; ++s) rows.push_back(make_row({s, 0, kQuestionCount - s}));
  return rows;
}

std::vector<StrategyRow> strategy_table_three_category() {
  std::vector<StrategyRow> rows;
  for (int s = 0; s <= kQuestionCount; ++s) {
    for (int u = 0; s + u <= kQuestionCount; ++u) {
      rows.push_back(make_row({s, u, kQuestionCount - s - u}));
    }
  }
  return rows;
}

}  // namespace lucky13
