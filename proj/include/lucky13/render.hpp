#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucky13/simulation.hpp"
#include "lucky13/strategy.hpp"
#include "lucky13/tracker.hpp"

namespace lucky13 {

// Dollars with two decimals, probabilities with four.
std::string format_money(double dollars);
std::string format_probability(double p);
// "4-6/6;7-9/9", empty when there are no ties.
std::string format_ties(const std::vector<Bet>& ties);

enum class TableUtility { kWinProbability, kExpectedWinnings, kBoth };

// "winprob", "winnings", "both".
std::optional<TableUtility> parse_table_utility(std::string_view text);
std::string_view to_string(TableUtility utility);

// Columns: s,u,g,utility,range,number,win_prob,expected_winnings,ties.
// With kBoth each profile contributes a winprob row then a winnings row.
void write_table_csv(std::ostream& out, const std::vector<StrategyRow>& rows, TableUtility utility);
// Aligned text, one line per profile with the selected utilities side by side.
void write_table_text(std::ostream& out, const std::vector<StrategyRow>& rows, TableUtility utility);

// Header: reveal_index,correct_so_far,expected_winnings,range_prob,number_prob.
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& points);

// Header: k,count,frequency.
void write_histogram_csv(std::ostream& out, const Histogram14& histogram);
void write_histogram_text(std::ostream& out, const Histogram14& histogram);

}  // namespace lucky13
