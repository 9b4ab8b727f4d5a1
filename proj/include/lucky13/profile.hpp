#pragma once

#include <array>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "lucky13/pmf.hpp"

namespace lucky13 {

// Self-assessed knowledge of one question.
enum class Category { kSure, kUnsure, kGuess };

constexpr double success_probability(Category c) {
  switch (c) {
    case Category::kSure:
      return 1.0;
    case Category::kUnsure:
      return 0.75;
    case Category::kGuess:
      return 0.5;
  }
  return 0.5;
}

char category_letter(Category c);
// Accepts "S"/"U"/"G" (any case); throws InvalidInput otherwise.
Category parse_category(std::string_view text);

// Category multiset. Totals below 13 describe a pool of remaining questions.
struct CategoryCounts {
  int sure = 0;
  int unsure = 0;
  int guess = 0;

  int total() const { return sure + unsure + guess; }
  int& count(Category c);
  int count(Category c) const;

  friend bool operator==(const CategoryCounts&, const CategoryCounts&) = default;
};

inline constexpr double kMinQuestionProbability = 0.5;
inline constexpr double kMaxQuestionProbability = 1.0;

// A contestant's knowledge model over all 13 questions: either category
// counts (s + u + g = 13) or one success probability per question, each
// in [0.5, 1].
class QuestionProfile {
 public:
  static QuestionProfile from_counts(int sure, int unsure, int guess);
  static QuestionProfile from_counts(const CategoryCounts& counts);
  static QuestionProfile from_probabilities(std::span<const double> probabilities);

  bool is_categorical() const { return std::holds_alternative<CategoryCounts>(form_); }
  // Precondition: is_categorical().
  const CategoryCounts& counts() const { return std::get<CategoryCounts>(form_); }
  // Precondition: !is_categorical().
  const std::array<double, kQuestionCount>& probabilities() const {
    return std::get<std::array<double, kQuestionCount>>(form_);
  }

  // Per-question success probabilities; categories expand as S..., U..., G...
  std::vector<double> success_probabilities() const;
  double mean() const;

  friend bool operator==(const QuestionProfile&, const QuestionProfile&) = default;

 private:
  using Form = std::variant<CategoryCounts, std::array<double, kQuestionCount>>;
  explicit QuestionProfile(Form form) : form_(std::move(form)) {}

  Form form_;
};

// Identifies a revealed question: by category label, or by its assessed
// success probability (zero-category profiles).
using QuestionRef = std::variant<Category, double>;

struct Reveal {
  QuestionRef question;
  bool correct = false;
};

double success_probability(const QuestionRef& ref);

}  // namespace lucky13
