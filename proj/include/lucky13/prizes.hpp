#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace lucky13 {

enum class LuckyRange { k1to3, k4to6, k7to9, k10to12, k13 };

inline constexpr std::array<LuckyRange, 5> kAllRanges = {
    LuckyRange::k1to3, LuckyRange::k4to6, LuckyRange::k7to9, LuckyRange::k10to12,
    LuckyRange::k13};

struct RangeBounds {
  int low;
  int high;

  bool contains(int k) const { return low <= k && k <= high; }
};

// Inclusive bounds. Range 1-3 starts at 1: a contestant cannot bet on zero.
RangeBounds range_bounds(LuckyRange range);
// Position 0..4 in ascending order.
int range_index(LuckyRange range);
std::string_view to_string(LuckyRange range);
// Accepts "1-3", "4-6", "7-9", "10-12", "13".
std::optional<LuckyRange> parse_range(std::string_view text);

// Prizes per Lucky Range plus the Lucky Number bonus. Bounds are fixed by
// LuckyRange; prizes must be positive and strictly increasing.
class PrizeSchedule {
 public:
  static PrizeSchedule standard();
  static PrizeSchedule custom(const std::array<double, 5>& range_prizes, double number_bonus);

  double prize(LuckyRange range) const { return prizes_[static_cast<std::size_t>(range_index(range))]; }
  double number_bonus() const { return bonus_; }
  const std::array<double, 5>& prizes() const { return prizes_; }

  PrizeSchedule scaled(double factor) const;

 private:
  PrizeSchedule(const std::array<double, 5>& prizes, double bonus) : prizes_(prizes), bonus_(bonus) {}

  std::array<double, 5> prizes_;
  double bonus_;
};

// A Lucky Range with an optional Lucky Number. The number is required to
// lie in the range, and is absent exactly for range 13.
struct Bet {
  LuckyRange range = LuckyRange::k7to9;
  std::optional<int> number;

  friend bool operator==(const Bet&, const Bet&) = default;
};

// Throws InvalidInput when the number is outside the range, or given with range 13.
void validate_bet(const Bet& bet);
Bet make_bet(LuckyRange range, std::optional<int> number);
// "10-12/11" or "13"; throws InvalidInput.
Bet parse_bet(std::string_view text);
std::string to_string(const Bet& bet);

}  // namespace lucky13
