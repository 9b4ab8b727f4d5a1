#include "lucky13/prob_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lucky13/error.hpp"

namespace lucky13 {
namespace {

constexpr double kRefMatchTolerance = 1e-9;

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidInput("probability outside [0, 1]: " + std::to_string(p));
  }
}

double binomial_coefficient(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

// Convolution of two distributions whose supports add to at most 13.
Pmf13::Masses convolve(const Pmf13::Masses& a, const Pmf13::Masses& b) {
  Pmf13::Masses out{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0.0) continue;
      if (i + j >= out.size()) {
        throw InvalidInput("combined support exceeds 13 questions");
      }
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

bool nearly_equal(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= 1e-12 * scale;
}

Pmf13 binomial_pmf(int n, double p) {
  if (n < 0 || n > kQuestionCount) {
    throw InvalidInput("binomial trial count outside 0..13: " + std::to_string(n));
  }
  check_probability(p);
  Pmf13::Masses m{};
  for (int k = 0; k <= n; ++k) {
    m[static_cast<std::size_t>(k)] =
        binomial_coefficient(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
  }
  return Pmf13::from_masses(m);
}

Pmf13 poisson_binomial_pmf(std::span<const double> probabilities) {
  if (probabilities.size() > static_cast<std::size_t>(kQuestionCount)) {
    throw InvalidInput("at most 13 question probabilities are supported");
  }
  Pmf13::Masses m{};
  m[0] = 1.0;
  std::size_t support = 0;
  for (double p : probabilities) {
    check_probability(p);
    ++support;
    for (std::size_t k = support; k > 0; --k) {
      m[k] = m[k] * (1.0 - p) + m[k - 1] * p;
    }
    m[0] *= 1.0 - p;
  }
  return Pmf13::from_masses(m);
}

Pmf13 category_pmf(const CategoryCounts& counts) {
  if (counts.sure < 0 || counts.unsure < 0 || counts.guess < 0) {
    throw InvalidInput("category counts must be non-negative");
  }
  if (counts.total() > kQuestionCount) {
    throw InvalidInput("more than 13 questions in pool");
  }
  const auto unsure = binomial_pmf(counts.unsure, success_probability(Category::kUnsure));
  const auto guess = binomial_pmf(counts.guess, success_probability(Category::kGuess));
  return Pmf13::from_masses(convolve(unsure.masses(), guess.masses())).shifted(counts.sure);
}

Pmf13 exact_pmf(const QuestionProfile& profile) {
  if (profile.is_categorical()) return category_pmf(profile.counts());
  return poisson_binomial_pmf(profile.probabilities());
}

double range_probability(const Pmf13& pmf, LuckyRange range) {
  const auto b = range_bounds(range);
  return pmf.mass_between(b.low, b.high);
}

QuestionPool::QuestionPool(const QuestionProfile& profile)
    : categorical_(profile.is_categorical()) {
  if (categorical_) {
    counts_ = profile.counts();
  } else {
    const auto& p = profile.probabilities();
    probabilities_.assign(p.begin(), p.end());
  }
}

int QuestionPool::size() const {
  return categorical_ ? counts_.total() : static_cast<int>(probabilities_.size());
}

namespace {

std::optional<Category> category_for(const QuestionRef& ref) {
  if (const auto* c = std::get_if<Category>(&ref)) return *c;
  const double p = std::get<double>(ref);
  for (Category c : {Category::kSure, Category::kUnsure, Category::kGuess}) {
    if (std::abs(p - success_probability(c)) <= kRefMatchTolerance) return c;
  }
  return std::nullopt;
}

std::string describe(const QuestionRef& ref) {
  if (const auto* c = std::get_if<Category>(&ref)) return std::string(1, category_letter(*c));
  return "p=" + std::to_string(std::get<double>(ref));
}

}  // namespace

bool QuestionPool::contains(const QuestionRef& ref) const {
  if (categorical_) {
    const auto c = category_for(ref);
    return c && counts_.count(*c) > 0;
  }
  const double p = success_probability(ref);
  return std::any_of(probabilities_.begin(), probabilities_.end(),
                     [p](double q) { return std::abs(q - p) <= kRefMatchTolerance; });
}

void QuestionPool::take(const QuestionRef& ref) {
  if (size() == 0) throw StateConflict("all 13 questions have already been revealed");
  if (!contains(ref)) {
    throw StateConflict("no remaining question matches " + describe(ref));
  }
  if (categorical_) {
    --counts_.count(*category_for(ref));
    return;
  }
  const double p = success_probability(ref);
  const auto it = std::find_if(probabilities_.begin(), probabilities_.end(),
                               [p](double q) { return std::abs(q - p) <= kRefMatchTolerance; });
  probabilities_.erase(it);
}

Pmf13 QuestionPool::pmf() const {
  return categorical_ ? category_pmf(counts_) : poisson_binomial_pmf(probabilities_);
}

Pmf13 condition_on_reveals(const QuestionProfile& profile, std::span<const Reveal> reveals) {
  if (reveals.size() > static_cast<std::size_t>(kQuestionCount)) {
    throw StateConflict("more reveals than questions");
  }
  QuestionPool pool(profile);
  int correct = 0;
  for (const auto& r : reveals) {
    pool.take(r.question);
    correct += r.correct ? 1 : 0;
  }
  return pool.pmf().shifted(correct);
}

ModeResult darroch_bracket(double mean, int n) {
  if (n < 1 || n > kQuestionCount) throw InvalidInput("trial count must be in 1..13");
  if (!(mean >= 0.0 && mean <= n)) throw InvalidInput("mean outside [0, n]");
  const int k = static_cast<int>(std::floor(mean));
  ModeResult r;
  r.mean = mean;
  if (k >= n) {
    r.modes = {n};
  } else if (mean < k + 1.0 / (k + 2)) {
    r.modes = {k};
  } else if (mean <= k + 1 - 1.0 / (n - k + 1)) {
    r.modes = {k, k + 1};
  } else {
    r.modes = {k + 1};
  }
  return r;
}

ModeResult darroch_mode(std::span<const double> probabilities) {
  if (probabilities.empty()) throw InvalidInput("probability vector is empty");
  if (probabilities.size() > static_cast<std::size_t>(kQuestionCount)) {
    throw InvalidInput("at most 13 question probabilities are supported");
  }
  for (double p : probabilities) check_probability(p);
  const double mean = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  const int n = static_cast<int>(probabilities.size());
  return darroch_bracket(std::min(mean, static_cast<double>(n)), n);
}

std::vector<int> pmf_argmax(const Pmf13& pmf) {
  const auto& m = pmf.masses();
  const double best = *std::max_element(m.begin(), m.end());
  std::vector<int> out;
  for (int k = 0; k <= kQuestionCount; ++k) {
    if (nearly_equal(pmf[k], best)) out.push_back(k);
  }
  return out;
}

RangeMode mode_in_range(const Pmf13& pmf, LuckyRange range) {
  const auto b = range_bounds(range);
  double best = pmf[b.low];
  for (int k = b.low + 1; k <= b.high; ++k) best = std::max(best, pmf[k]);
  RangeMode r;
  for (int k = b.low; k <= b.high; ++k) {
    if (nearly_equal(pmf[k], best)) r.tied.push_back(k);
  }
  const double mean = pmf.mean();
  r.number = r.tied.front();
  for (int k : r.tied) {
    const double dk = std::abs(k - mean);
    const double dbest = std::abs(r.number - mean);
    if (dk < dbest - 1e-9 || std::abs(dk - dbest) <= 1e-9) r.number = k;
  }
  return r;
}

}  // namespace lucky13
