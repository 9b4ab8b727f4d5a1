#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lucky13/prizes.hpp"
#include "lucky13/profile.hpp"
#include "lucky13/rng.hpp"

namespace lucky13 {

struct SimConfig {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  // 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

void validate(const SimConfig& config);

// Counts of simulated totals 0..13.
class Histogram14 {
 public:
  using Counts = std::array<std::uint64_t, 14>;

  Histogram14() = default;
  explicit Histogram14(const Counts& counts);

  const Counts& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(int k) const { return counts_.at(static_cast<std::size_t>(k)); }
  double frequency(int k) const;
  double range_frequency(LuckyRange range) const;
  double mean() const;
  // Lowest k with the largest count.
  int mode() const;

  void add(int k, std::uint64_t n = 1);
  Histogram14& operator+=(const Histogram14& other);

  friend bool operator==(const Histogram14&, const Histogram14&) = default;

 private:
  Counts counts_{};
  std::uint64_t total_ = 0;
};

// Empirical distribution of total correct answers for a profile.
Histogram14 simulate_profile(const QuestionProfile& profile, const SimConfig& config);

struct QuestionCategoryWeight {
  std::string name;
  double probability = 0.0;
  // Whether a contestant can be an expert in this category ("Other" cannot).
  bool expertise_eligible = true;
};

// Average-contestant model: question categories drawn by observed frequency,
// expertise in 1 + Binom(expertise_trials, expertise_success_p) categories.
struct PopulationModel {
  std::vector<QuestionCategoryWeight> categories;
  int expertise_trials = 20;
  double expertise_success_p = 0.075;
  double expertise_sure_p = 0.4;
  double expertise_unsure_p = 0.6;
  double non_expert_p = 0.5;
  // Draw expertise categories proportional to their weight instead of uniformly.
  bool weighted_expertise = false;

  // Observed category frequencies from 156 questions across 12 games,
  // normalized (the rounded table sums to 1.01).
  static PopulationModel standard();
  // Normalizes positive weights to sum to 1 and validates the model.
  static PopulationModel from_categories(std::vector<QuestionCategoryWeight> categories);

  std::size_t eligible_count() const;
  // Correctness probability of a question in an expertise category: 0.85 by default.
  double expert_correct_p() const;
};

void validate(const PopulationModel& model);

struct ExpertiseDraw {
  // 1 + Binom(trials, p) before capping at the number of eligible categories.
  int drawn = 0;
  // Indices into model.categories, distinct.
  std::vector<std::size_t> categories;
};

ExpertiseDraw draw_expertise(const PopulationModel& model, TrialRng& rng);
std::vector<std::string> sample_expertise(const PopulationModel& model, TrialRng& rng);

// Total correct answers of one randomly drawn contestant.
int simulate_contestant(const PopulationModel& model, TrialRng& rng);

Histogram14 run_population(const PopulationModel& model, const SimConfig& config);

// Runs trial(rng) for every trial index with its own stream, possibly in parallel.
Histogram14 run_trials(const SimConfig& config, const std::function<int(TrialRng&)>& trial);

}  // namespace lucky13
