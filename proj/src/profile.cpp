#include "lucky13/profile.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lucky13/error.hpp"

namespace lucky13 {

char category_letter(Category c) {
  switch (c) {
    case Category::kSure:
      return 'S';
    case Category::kUnsure:
      return 'U';
    case Category::kGuess:
      return 'G';
  }
  return '?';
}

Category parse_category(std::string_view text) {
  if (text == "S" || text == "s") return Category::kSure;
  if (text == "U" || text == "u") return Category::kUnsure;
  if (text == "G" || text == "g") return Category::kGuess;
  throw InvalidInput("unknown question category '" + std::string(text) + "' (expected S, U or G)");
}

int& CategoryCounts::count(Category c) {
  switch (c) {
    case Category::kSure:
      return sure;
    case Category::kUnsure:
      return unsure;
    case Category::kGuess:
      return guess;
  }
  return guess;
}

int CategoryCounts::count(Category c) const { return const_cast<CategoryCounts&>(*this).count(c); }

QuestionProfile QuestionProfile::from_counts(int sure, int unsure, int guess) {
  return from_counts(CategoryCounts{sure, unsure, guess});
}

QuestionProfile QuestionProfile::from_counts(const CategoryCounts& counts) {
  if (counts.sure < 0 || counts.unsure < 0 || counts.guess < 0) {
    throw InvalidInput("category counts must be non-negative");
  }
  if (counts.total() != kQuestionCount) {
    throw InvalidInput("category counts sum to " + std::to_string(counts.total()) +
                       ", expected 13");
  }
  return QuestionProfile(counts);
}

QuestionProfile QuestionProfile::from_probabilities(std::span<const double> probabilities) {
  if (probabilities.size() != static_cast<std::size_t>(kQuestionCount)) {
    throw InvalidInput("expected 13 question probabilities, got " +
                       std::to_string(probabilities.size()));
  }
  std::array<double, kQuestionCount> p{};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = probabilities[i];
    if (!(v >= kMinQuestionProbability && v <= kMaxQuestionProbability)) {
      throw InvalidInput("question probability " + std::to_string(v) + " outside [0.5, 1]");
    }
    p[i] = v;
  }
  return QuestionProfile(p);
}

std::vector<double> QuestionProfile::success_probabilities() const {
  if (!is_categorical()) {
    const auto& p = probabilities();
    return {p.begin(), p.end()};
  }
  const auto& c = counts();
  std::vector<double> out;
  out.reserve(kQuestionCount);
  out.insert(out.end(), static_cast<std::size_t>(c.sure), success_probability(Category::kSure));
  out.insert(out.end(), static_cast<std::size_t>(c.unsure), success_probability(Category::kUnsure));
  out.insert(out.end(), static_cast<std::size_t>(c.guess), success_probability(Category::kGuess));
  return out;
}

double QuestionProfile::mean() const {
  const auto p = success_probabilities();
  return std::accumulate(p.begin(), p.end(), 0.0);
}

double success_probability(const QuestionRef& ref) {
  if (const auto* c = std::get_if<Category>(&ref)) return success_probability(*c);
  return std::get<double>(ref);
}

}  // namespace lucky13
