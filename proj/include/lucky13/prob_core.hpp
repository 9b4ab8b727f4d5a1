#pragma once

#include <span>
#include <vector>

#include "lucky13/pmf.hpp"
#include "lucky13/prizes.hpp"
#include "lucky13/profile.hpp"

namespace lucky13 {

// Binom(n, p) over 0..n, zero above n. Closed form C(n,k) p^k (1-p)^(n-k).
Pmf13 binomial_pmf(int n, double p);

// Poisson binomial PMF of independent Bernoulli(p_i), folded one question at
// a time in input order. At most 13 entries, each in [0, 1].
Pmf13 poisson_binomial_pmf(std::span<const double> probabilities);

// s + Binom(u, 0.75) + Binom(g, 0.5) for any pool with total <= 13.
Pmf13 category_pmf(const CategoryCounts& counts);

// Distribution of total correct answers for a full 13-question profile.
Pmf13 exact_pmf(const QuestionProfile& profile);

double range_probability(const Pmf13& pmf, LuckyRange range);

// Questions not yet revealed. Categorical profiles track a category multiset;
// probability profiles track the remaining probability values.
class QuestionPool {
 public:
  explicit QuestionPool(const QuestionProfile& profile);

  bool is_categorical() const { return categorical_; }
  int size() const;
  const CategoryCounts& counts() const { return counts_; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  // Removes the referenced question. Throws StateConflict when the pool is
  // empty or the reference matches nothing remaining.
  void take(const QuestionRef& ref);
  bool contains(const QuestionRef& ref) const;

  Pmf13 pmf() const;

 private:
  bool categorical_;
  CategoryCounts counts_;
  std::vector<double> probabilities_;
};

// PMF of the final total given the revealed outcomes: the remaining pool's
// PMF shifted by the number of correct reveals.
Pmf13 condition_on_reveals(const QuestionProfile& profile, std::span<const Reveal> reveals);

// Darroch's bracket for the mode of a Poisson binomial variable with mean
// `mean` over `n` trials: {k}, {k, k+1} or {k+1} with k = floor(mean).
struct ModeResult {
  std::vector<int> modes;
  double mean = 0.0;
};

ModeResult darroch_bracket(double mean, int n);
ModeResult darroch_mode(std::span<const double> probabilities);

// All global maximizers of the PMF, ascending.
std::vector<int> pmf_argmax(const Pmf13& pmf);

struct RangeMode {
  // Chosen value: among tied maxima, the one nearest the PMF mean, then the higher.
  int number = 0;
  // Every value attaining the in-range maximum, ascending (includes `number`).
  std::vector<int> tied;
};

RangeMode mode_in_range(const Pmf13& pmf, LuckyRange range);

// Relative comparison used for tie detection across the library.
bool nearly_equal(double a, double b);

}  // namespace lucky13
