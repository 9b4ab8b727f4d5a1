#pragma once

#include <vector>

#include "lucky13/pmf.hpp"
#include "lucky13/prob_core.hpp"
#include "lucky13/prizes.hpp"
#include "lucky13/profile.hpp"
#include "lucky13/strategy.hpp"

namespace lucky13 {

struct TrajectoryPoint {
  int reveal_index = 0;
  int correct_so_far = 0;
  double expected_winnings = 0.0;
  double range_probability = 0.0;
  double number_probability = 0.0;
};

enum class OfferAdvice { kAccept, kReject };

const char* to_string(OfferAdvice advice);

// Risk-neutral comparison of a quit offer against the continuation value.
// Accept iff offer >= continuation_value.
struct OfferEvaluation {
  double offer = 0.0;
  double continuation_value = 0.0;
  OfferAdvice advice = OfferAdvice::kReject;
  double margin = 0.0;
  double range_probability = 0.0;
  double number_probability = 0.0;
};

// Same decision under a custom utility: compares u(offer) to E[u(payoff)].
struct UtilityOfferEvaluation {
  double offer = 0.0;
  double offer_utility = 0.0;
  double expected_utility = 0.0;
  // Dollar amount whose utility equals expected_utility.
  double certainty_equivalent = 0.0;
  OfferAdvice advice = OfferAdvice::kReject;
};

struct OfferRecord {
  int after_reveal = 0;
  double amount = 0.0;
  OfferAdvice decision = OfferAdvice::kReject;
};

struct OfferOutcome;

// Immutable record of one game: profile, the bet fixed at the start, the
// revealed answers so far and the offers evaluated. Every operation returns
// a new state.
class GameState {
 public:
  // Throws InvalidInput for an invalid bet.
  static GameState new_game(const QuestionProfile& profile, const Bet& bet,
                            const PrizeSchedule& schedule = PrizeSchedule::standard());

  const QuestionProfile& profile() const { return profile_; }
  const Bet& bet() const { return bet_; }
  const PrizeSchedule& schedule() const { return schedule_; }
  const std::vector<Reveal>& reveals() const { return reveals_; }
  const std::vector<OfferRecord>& offers() const { return offers_; }
  const QuestionPool& remaining() const { return pool_; }

  int reveal_count() const { return static_cast<int>(reveals_.size()); }
  int correct_so_far() const { return correct_; }
  bool is_complete() const { return pool_.size() == 0; }

  Pmf13 conditional_pmf() const;
  TrajectoryPoint current_point() const;

  // Throws StateConflict when the pool is exhausted or the question is not remaining.
  GameState reveal(const QuestionRef& question, bool correct) const;

  // Throws InvalidInput for negative offers, StateConflict after the last reveal.
  OfferOutcome evaluate_offer(double offer) const;
  UtilityOfferEvaluation evaluate_offer(double offer, const UtilityFunction& utility) const;

  // Initial point plus one point per reveal.
  std::vector<TrajectoryPoint> trajectory() const;
  // Trajectory of the same reveal history under a different bet.
  std::vector<TrajectoryPoint> what_if(const Bet& alternative) const;

 private:
  GameState(QuestionProfile profile, Bet bet, PrizeSchedule schedule);

  TrajectoryPoint point_for(const Pmf13& pmf) const;

  QuestionProfile profile_;
  Bet bet_;
  PrizeSchedule schedule_;
  std::vector<Reveal> reveals_;
  std::vector<OfferRecord> offers_;
  QuestionPool pool_;
  int correct_ = 0;
};

struct OfferOutcome {
  GameState state;
  OfferEvaluation evaluation;
};

}  // namespace lucky13
