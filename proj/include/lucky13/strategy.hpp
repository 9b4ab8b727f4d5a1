#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucky13/pmf.hpp"
#include "lucky13/prob_core.hpp"
#include "lucky13/prizes.hpp"
#include "lucky13/profile.hpp"

namespace lucky13 {

// How a contestant values dollar outcomes.
//
// WinProbability (constant utility) and ExpectedWinnings (linear utility)
// follow the two-stage rule: the range is chosen first, the number is then
// the in-range mode. Custom evaluates every (range, number) bet jointly.
class UtilityFunction {
 public:
  enum class Kind { kWinProbability, kExpectedWinnings, kCustom };
  using Mapping = std::function<double(double dollars)>;

  static UtilityFunction win_probability() { return UtilityFunction(Kind::kWinProbability, {}); }
  static UtilityFunction expected_winnings() { return UtilityFunction(Kind::kExpectedWinnings, {}); }
  // Mapping must be finite and non-decreasing over the attainable payoffs;
  // checked when a schedule is applied.
  static UtilityFunction custom(Mapping mapping);

  Kind kind() const { return kind_; }
  // Custom mapping; the built-in kinds map to an indicator and identity.
  double operator()(double dollars) const;

 private:
  UtilityFunction(Kind kind, Mapping mapping) : kind_(kind), mapping_(std::move(mapping)) {}

  Kind kind_;
  Mapping mapping_;
};

// Every dollar amount a single bet can pay under the schedule (including 0), ascending.
std::vector<double> attainable_payoffs(const PrizeSchedule& schedule);
// Throws InvalidInput unless the mapping is finite and non-decreasing on attainable_payoffs().
void validate_utility(const UtilityFunction& utility, const PrizeSchedule& schedule);

struct Recommendation {
  Bet bet;
  // P(N in range).
  double win_probability = 0.0;
  // prize(range) P(N in range) + bonus P(N = number).
  double expected_winnings = 0.0;
  // P(N = number); 0 when no number is bet.
  double number_hit_probability = 0.0;
  // Other equally optimal bets, best first by the tie-break order.
  std::vector<Bet> ties;
};

double expected_winnings(const Pmf13& pmf, const Bet& bet,
                         const PrizeSchedule& schedule = PrizeSchedule::standard());

double expected_utility(const Pmf13& pmf, const Bet& bet, const UtilityFunction& utility,
                        const PrizeSchedule& schedule = PrizeSchedule::standard());

// Payoff of a bet once the total is known.
double payoff(const Bet& bet, int correct, const PrizeSchedule& schedule = PrizeSchedule::standard());

Recommendation recommend(const Pmf13& pmf, const UtilityFunction& utility,
                         const PrizeSchedule& schedule = PrizeSchedule::standard());

// Maximizes the full expected winnings, bonus included, over all bets.
Recommendation joint_recommend(const Pmf13& pmf,
                               const PrizeSchedule& schedule = PrizeSchedule::standard());

// "winprob" or "winnings".
std::optional<UtilityFunction> parse_utility(std::string_view name);

// Recommendation for a profile as reported by the CLI and the service.
struct Advice {
  Recommendation recommendation;
  double mean = 0.0;
  // Darroch bracket, reported for probability-vector profiles.
  std::optional<ModeResult> modes;
};

Advice advise(const QuestionProfile& profile, const UtilityFunction& utility, bool joint);

// Every legal bet that names a number where one is available: (range, n) for
// n in range, plus 13/NA.
std::vector<Bet> all_number_bets();

struct StrategyRow {
  CategoryCounts counts;
  Recommendation win_probability;
  Recommendation expected_winnings;
};

// Sure = 0..13, Unsure = 0, Guess = 13 - Sure.
std::vector<StrategyRow> strategy_table_two_category();
// All 105 (s, u, g) with s + u + g = 13, ordered by s then u.
std::vector<StrategyRow> strategy_table_three_category();

}  // namespace lucky13
