#include "lucky13/prizes.hpp"

#include <charconv>
#include <cmath>

#include "lucky13/error.hpp"

namespace lucky13 {

RangeBounds range_bounds(LuckyRange range) {
  switch (range) {
    case LuckyRange::k1to3:
      return {1, 3};
    case LuckyRange::k4to6:
      return {4, 6};
    case LuckyRange::k7to9:
      return {7, 9};
    case LuckyRange::k10to12:
      return {10, 12};
    case LuckyRange::k13:
      return {13, 13};
  }
  return {13, 13};
}

int range_index(LuckyRange range) { return static_cast<int>(range); }

std::string_view to_string(LuckyRange range) {
  switch (range) {
    case LuckyRange::k1to3:
      return "1-3";
    case LuckyRange::k4to6:
      return "4-6";
    case LuckyRange::k7to9:
      return "7-9";
    case LuckyRange::k10to12:
      return "10-12";
    case LuckyRange::k13:
      return "13";
  }
  return "?";
}

std::optional<LuckyRange> parse_range(std::string_view text) {
  for (LuckyRange r : kAllRanges) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

PrizeSchedule PrizeSchedule::standard() {
  return PrizeSchedule({5000.0, 15000.0, 25000.0, 100000.0, 1000000.0}, 25000.0);
}

PrizeSchedule PrizeSchedule::custom(const std::array<double, 5>& range_prizes, double number_bonus) {
  double previous = 0.0;
  for (double p : range_prizes) {
    if (!std::isfinite(p) || p <= previous) {
      throw InvalidInput("range prizes must be positive and strictly increasing");
    }
    previous = p;
  }
  if (!std::isfinite(number_bonus) || number_bonus < 0.0) {
    throw InvalidInput("number bonus must be non-negative");
  }
  return PrizeSchedule(range_prizes, number_bonus);
}

PrizeSchedule PrizeSchedule::scaled(double factor) const {
  if (!(factor > 0.0)) throw InvalidInput("prize scale factor must be positive");
  auto p = prizes_;
  for (double& v : p) v *= factor;
  return custom(p, bonus_ * factor);
}

void validate_bet(const Bet& bet) {
  if (bet.range == LuckyRange::k13) {
    if (bet.number) throw InvalidInput("Lucky Number is not available with Lucky Range 13");
    return;
  }
  if (!bet.number) return;
  if (!range_bounds(bet.range).contains(*bet.number)) {
    throw InvalidInput("Lucky Number " + std::to_string(*bet.number) + " is outside Lucky Range " +
                       std::string(to_string(bet.range)));
  }
}

Bet make_bet(LuckyRange range, std::optional<int> number) {
  Bet b{range, number};
  validate_bet(b);
  return b;
}

Bet parse_bet(std::string_view text) {
  const auto slash = text.find('/');
  const auto range_text = text.substr(0, slash);
  const auto range = parse_range(range_text);
  if (!range) throw InvalidInput("unknown Lucky Range '" + std::string(range_text) + "'");
  std::optional<int> number;
  if (slash != std::string_view::npos) {
    const auto num_text = text.substr(slash + 1);
    if (num_text != "NA" && !num_text.empty()) {
      int n = 0;
      const auto [ptr, ec] = std::from_chars(num_text.data(), num_text.data() + num_text.size(), n);
      if (ec != std::errc{} || ptr != num_text.data() + num_text.size()) {
        throw InvalidInput("bad Lucky Number '" + std::string(num_text) + "'");
      }
      number = n;
    }
  }
  return make_bet(*range, number);
}

std::string to_string(const Bet& bet) {
  std::string s(to_string(bet.range));
  s += '/';
  s += bet.number ? std::to_string(*bet.number) : "NA";
  return s;
}

}  // namespace lucky13
