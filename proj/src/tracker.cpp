#include "lucky13/tracker.hpp"

#include <cmath>

#include "lucky13/error.hpp"

namespace lucky13 {

const char* to_string(OfferAdvice advice) {
  return advice == OfferAdvice::kAccept ? "accept" : "reject";
}

GameState::GameState(QuestionProfile profile, Bet bet, PrizeSchedule schedule)
    : profile_(std::move(profile)),
      bet_(bet),
      schedule_(schedule),
      pool_(profile_) {}

GameState GameState::new_game(const QuestionProfile& profile, const Bet& bet,
                              const PrizeSchedule& schedule) {
  validate_bet(bet);
  return GameState(profile, bet, schedule);
}

Pmf13 GameState::conditional_pmf() const { return pool_.pmf().shifted(correct_); }

TrajectoryPoint GameState::point_for(const Pmf13& pmf) const {
  TrajectoryPoint p;
  p.reveal_index = reveal_count();
  p.correct_so_far = correct_;
  p.expected_winnings = expected_winnings(pmf, bet_, schedule_);
  p.range_probability = range_probability(pmf, bet_.range);
  p.number_probability = bet_.number ? pmf[*bet_.number] : 0.0;
  return p;
}

TrajectoryPoint GameState::current_point() const { return point_for(conditional_pmf()); }

GameState GameState::reveal(const QuestionRef& question, bool correct) const {
  GameState next = *this;
  next.pool_.take(question);
  next.reveals_.push_back({question, correct});
  next.correct_ += correct ? 1 : 0;
  return next;
}

OfferOutcome GameState::evaluate_offer(double offer) const {
  if (!std::isfinite(offer) || offer < 0.0) throw InvalidInput("offer must be a non-negative amount");
  if (is_complete()) throw StateConflict("game is fully revealed; no offer can be evaluated");
  const auto point = current_point();
  OfferEvaluation ev;
  ev.offer = offer;
  ev.continuation_value = point.expected_winnings;
  ev.margin = offer - point.expected_winnings;
  ev.advice = ev.margin >= 0.0 ? OfferAdvice::kAccept : OfferAdvice::kReject;
  ev.range_probability = point.range_probability;
  ev.number_probability = point.number_probability;

  GameState next = *this;
  next.offers_.push_back({reveal_count(), offer, ev.advice});
  return {std::move(next), ev};
}

UtilityOfferEvaluation GameState::evaluate_offer(double offer, const UtilityFunction& utility) const {
  if (!std::isfinite(offer) || offer < 0.0) throw InvalidInput("offer must be a non-negative amount");
  if (is_complete()) throw StateConflict("game is fully revealed; no offer can be evaluated");
  validate_utility(utility, schedule_);
  const auto pmf = conditional_pmf();
  UtilityOfferEvaluation ev;
  ev.offer = offer;
  ev.offer_utility = utility(offer);
  ev.expected_utility = expected_utility(pmf, bet_, utility, schedule_);
  ev.advice = ev.offer_utility >= ev.expected_utility ? OfferAdvice::kAccept : OfferAdvice::kReject;

  // Bisection on the non-decreasing mapping over [0, largest payoff].
  double lo = 0.0;
  double hi = attainable_payoffs(schedule_).back();
  for (int i = 0; i < 200 && hi - lo > 1e-6; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (utility(mid) < ev.expected_utility) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  ev.certainty_equivalent = hi;
  return ev;
}

std::vector<TrajectoryPoint> GameState::trajectory() const {
  GameState replay(profile_, bet_, schedule_);
  std::vector<TrajectoryPoint> points{replay.current_point()};
  for (const auto& r : reveals_) {
    replay = replay.reveal(r.question, r.correct);
    points.push_back(replay.current_point());
  }
  return points;
}

std::vector<TrajectoryPoint> GameState::what_if(const Bet& alternative) const {
  validate_bet(alternative);
  GameState copy = *this;
  copy.bet_ = alternative;
  return copy.trajectory();
}

}  // namespace lucky13
