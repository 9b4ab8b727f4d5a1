#include "lucky13/render.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace lucky13 {

std::string format_money(double dollars) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", dollars);
  return buf;
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", p);
  return buf;
}

std::string format_ties(const std::vector<Bet>& ties) {
  std::string out;
  for (const auto& t : ties) {
    if (!out.empty()) out += ';';
    out += to_string(t);
  }
  return out;
}

std::optional<TableUtility> parse_table_utility(std::string_view text) {
  if (text == "winprob") return TableUtility::kWinProbability;
  if (text == "winnings") return TableUtility::kExpectedWinnings;
  if (text == "both") return TableUtility::kBoth;
  return std::nullopt;
}

std::string_view to_string(TableUtility utility) {
  switch (utility) {
    case TableUtility::kWinProbability:
      return "winprob";
    case TableUtility::kExpectedWinnings:
      return "winnings";
    case TableUtility::kBoth:
      return "both";
  }
  return "?";
}

namespace {

std::string number_text(const Bet& bet) { return bet.number ? std::to_string(*bet.number) : "NA"; }

void csv_line(std::ostream& out, const CategoryCounts& c, std::string_view utility,
              const Recommendation& rec) {
  out << c.sure << ',' << c.unsure << ',' << c.guess << ',' << utility << ','
      << to_string(rec.bet.range) << ',' << number_text(rec.bet) << ','
      << format_probability(rec.win_probability) << ',' << format_money(rec.expected_winnings)
      << ',' << format_ties(rec.ties) << '\n';
}

void text_cell(std::ostream& out, const Recommendation& rec) {
  out << " | " << std::left << std::setw(6) << to_string(rec.bet.range) << std::right
      << std::setw(4) << number_text(rec.bet) << std::setw(9)
      << format_probability(rec.win_probability) << std::setw(14)
      << format_money(rec.expected_winnings) << "  " << std::left << std::setw(12)
      << (rec.ties.empty() ? "-" : format_ties(rec.ties)) << std::right;
}

}  // namespace

void write_table_csv(std::ostream& out, const std::vector<StrategyRow>& rows, TableUtility utility) {
  out << "s,u,g,utility,range,number,win_prob,expected_winnings,ties\n";
  for (const auto& row : rows) {
    if (utility != TableUtility::kExpectedWinnings) {
      csv_line(out, row.counts, "winprob", row.win_probability);
    }
    if (utility != TableUtility::kWinProbability) {
      csv_line(out, row.counts, "winnings", row.expected_winnings);
    }
  }
}

void write_table_text(std::ostream& out, const std::vector<StrategyRow>& rows, TableUtility utility) {
  const std::string cell_header = " | range  num win_prob      expected  ties        ";
  out << std::left << std::setw(8) << "S/U/G" << std::right;
  if (utility != TableUtility::kExpectedWinnings) out << " | " << std::left << std::setw(47) << "Maximizing Win Probability" << std::right;
  if (utility != TableUtility::kWinProbability) out << " | Maximizing Expected Winnings";
  out << '\n' << std::setw(8) << "";
  if (utility != TableUtility::kExpectedWinnings) out << cell_header;
  if (utility != TableUtility::kWinProbability) out << cell_header;
  out << '\n';
  for (const auto& row : rows) {
    std::ostringstream label;
    label << row.counts.sure << '/' << row.counts.unsure << '/' << row.counts.guess;
    out << std::left << std::setw(8) << label.str() << std::right;
    if (utility != TableUtility::kExpectedWinnings) text_cell(out, row.win_probability);
    if (utility != TableUtility::kWinProbability) text_cell(out, row.expected_winnings);
    out << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& points) {
  out << "reveal_index,correct_so_far,expected_winnings,range_prob,number_prob\n";
  for (const auto& p : points) {
    out << p.reveal_index << ',' << p.correct_so_far << ',' << format_money(p.expected_winnings)
        << ',' << format_probability(p.range_probability) << ','
        << format_probability(p.number_probability) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const Histogram14& histogram) {
  out << "k,count,frequency\n";
  for (int k = 0; k <= kQuestionCount; ++k) {
    out << k << ',' << histogram.count(k) << ',' << format_probability(histogram.frequency(k)) << '\n';
  }
}

void write_histogram_text(std::ostream& out, const Histogram14& histogram) {
  constexpr int kWidth = 50;
  std::uint64_t peak = 1;
  for (auto c : histogram.counts()) peak = std::max(peak, c);
  for (int k = 0; k <= kQuestionCount; ++k) {
    const auto c = histogram.count(k);
    const int bar = static_cast<int>(c * kWidth / peak);
    out << std::setw(2) << k << " | " << std::left << std::setw(kWidth) << std::string(static_cast<std::size_t>(bar), '#')
        << std::right << ' ' << std::setw(7) << c << "  " << format_probability(histogram.frequency(k)) << '\n';
  }
  out << "trials: " << histogram.total() << "  mean: " << format_probability(histogram.mean())
      << "  mode: " << histogram.mode() << '\n';
  for (LuckyRange r : kAllRanges) {
    out << "P(" << to_string(r) << ") ~ " << format_probability(histogram.range_frequency(r)) << '\n';
  }
}

}  // namespace lucky13
