#include "lucky13/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "lucky13/error.hpp"
#include "lucky13/prob_core.hpp"

namespace lucky13 {

void validate(const SimConfig& config) {
  if (config.trials < 1) throw InvalidInput("trials must be at least 1");
}

Histogram14::Histogram14(const Counts& counts)
    : counts_(counts), total_(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})) {}

double Histogram14::frequency(int k) const {
  return total_ == 0 ? 0.0 : static_cast<double>(count(k)) / static_cast<double>(total_);
}

double Histogram14::range_frequency(LuckyRange range) const {
  const auto b = range_bounds(range);
  double f = 0.0;
  for (int k = b.low; k <= b.high; ++k) f += frequency(k);
  return f;
}

double Histogram14::mean() const {
  if (total_ == 0) return 0.0;
  double sum = 0.0;
  for (int k = 0; k < 14; ++k) sum += k * static_cast<double>(count(k));
  return sum / static_cast<double>(total_);
}

int Histogram14::mode() const {
  return static_cast<int>(std::max_element(counts_.begin(), counts_.end()) - counts_.begin());
}

void Histogram14::add(int k, std::uint64_t n) {
  if (k < 0 || k > 13) throw InvalidInput("histogram bucket outside 0..13");
  counts_[static_cast<std::size_t>(k)] += n;
  total_ += n;
}

Histogram14& Histogram14::operator+=(const Histogram14& other) {
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
  total_ += other.total_;
  return *this;
}

Histogram14 run_trials(const SimConfig& config, const std::function<int(TrialRng&)>& trial) {
  validate(config);
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, config.trials));

  std::vector<Histogram14> partial(threads);
  auto work = [&](unsigned worker) {
    const std::uint64_t begin = config.trials * worker / threads;
    const std::uint64_t end = config.trials * (worker + 1) / threads;
    for (std::uint64_t i = begin; i < end; ++i) {
      TrialRng rng(config.seed, i);
      partial[worker].add(trial(rng));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  Histogram14 total;
  for (const auto& h : partial) total += h;
  return total;
}

Histogram14 simulate_profile(const QuestionProfile& profile, const SimConfig& config) {
  const auto probabilities = profile.success_probabilities();
  return run_trials(config, [&probabilities](TrialRng& rng) {
    int correct = 0;
    for (double p : probabilities) correct += rng.bernoulli(p) ? 1 : 0;
    return correct;
  });
}

namespace {

const std::vector<QuestionCategoryWeight>& observed_categories() {
  static const std::vector<QuestionCategoryWeight> table = {
      {"Celebrities", 0.12, true},
      {"Movies/TV", 0.08, true},
      {"Animals/Biology", 0.08, true},
      {"History", 0.07, true},
      {"Sports", 0.07, true},
      {"Geography", 0.07, true},
      {"Words", 0.05, true},
      {"Musicians", 0.05, true},
      {"Food", 0.04, true},
      {"US Politicians", 0.04, true},
      {"Inventions", 0.03, true},
      {"U.S. States", 0.03, true},
      {"Space", 0.03, true},
      {"U.S. Gov./Laws", 0.03, true},
      {"Holidays", 0.02, true},
      {"Literature/Magazines", 0.02, true},
      {"Theater", 0.02, true},
      {"Landmarks", 0.02, true},
      {"Periodic Table of Elements", 0.02, true},
      {"Business", 0.02, true},
      {"Other", 0.10, false},
  };
  return table;
}

void check_unit(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput(std::string(what) + " must be in [0, 1]");
}

}  // namespace

PopulationModel PopulationModel::standard() { return from_categories(observed_categories()); }

PopulationModel PopulationModel::from_categories(std::vector<QuestionCategoryWeight> categories) {
  double total = 0.0;
  for (const auto& c : categories) {
    if (!(c.probability > 0.0) || !std::isfinite(c.probability)) {
      throw InvalidInput("category '" + c.name + "' needs a positive weight");
    }
    total += c.probability;
  }
  for (auto& c : categories) c.probability /= total;
  PopulationModel model;
  model.categories = std::move(categories);
  validate(model);
  return model;
}

std::size_t PopulationModel::eligible_count() const {
  return static_cast<std::size_t>(std::count_if(categories.begin(), categories.end(),
                                                [](const auto& c) { return c.expertise_eligible; }));
}

double PopulationModel::expert_correct_p() const {
  return expertise_sure_p * success_probability(Category::kSure) +
         expertise_unsure_p * success_probability(Category::kUnsure);
}

void validate(const PopulationModel& model) {
  if (model.categories.empty()) throw InvalidInput("population model has no categories");
  double total = 0.0;
  for (const auto& c : model.categories) {
    if (!(c.probability >= 0.0)) throw InvalidInput("category probabilities must be non-negative");
    total += c.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidInput("category probabilities must sum to 1");
  if (model.eligible_count() == 0) throw InvalidInput("no category is eligible for expertise");
  if (model.expertise_trials < 0) throw InvalidInput("expertise_trials must be non-negative");
  check_unit(model.expertise_success_p, "expertise_success_p");
  check_unit(model.expertise_sure_p, "expertise_sure_p");
  check_unit(model.expertise_unsure_p, "expertise_unsure_p");
  check_unit(model.non_expert_p, "non_expert_p");
  if (std::abs(model.expertise_sure_p + model.expertise_unsure_p - 1.0) > 1e-9) {
    throw InvalidInput("expertise_sure_p + expertise_unsure_p must equal 1");
  }
}

ExpertiseDraw draw_expertise(const PopulationModel& model, TrialRng& rng) {
  ExpertiseDraw draw;
  draw.drawn = 1;
  for (int i = 0; i < model.expertise_trials; ++i) {
    draw.drawn += rng.bernoulli(model.expertise_success_p) ? 1 : 0;
  }

  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < model.categories.size(); ++i) {
    if (model.categories[i].expertise_eligible) eligible.push_back(i);
  }
  // Q can reach expertise_trials + 1; the sample is capped at the eligible count.
  const std::size_t q = std::min(static_cast<std::size_t>(draw.drawn), eligible.size());

  if (!model.weighted_expertise) {
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < q; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(eligible.size() - i));
      std::swap(eligible[i], eligible[j]);
    }
    draw.categories.assign(eligible.begin(), eligible.begin() + static_cast<std::ptrdiff_t>(q));
    return draw;
  }

  for (std::size_t picked = 0; picked < q; ++picked) {
    double mass = 0.0;
    for (std::size_t idx : eligible) mass += model.categories[idx].probability;
    double u = rng.uniform() * mass;
    std::size_t choice = eligible.size() - 1;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      u -= model.categories[eligible[i]].probability;
      if (u < 0.0) {
        choice = i;
        break;
      }
    }
    draw.categories.push_back(eligible[choice]);
    eligible.erase(eligible.begin() + static_cast<std::ptrdiff_t>(choice));
  }
  return draw;
}

std::vector<std::string> sample_expertise(const PopulationModel& model, TrialRng& rng) {
  std::vector<std::string> names;
  for (std::size_t idx : draw_expertise(model, rng).categories) {
    names.push_back(model.categories[idx].name);
  }
  return names;
}

namespace {

std::size_t draw_category(const PopulationModel& model, TrialRng& rng) {
  double u = rng.uniform();
  for (std::size_t i = 0; i < model.categories.size(); ++i) {
    u -= model.categories[i].probability;
    if (u < 0.0) return i;
  }
  return model.categories.size() - 1;
}

}  // namespace

int simulate_contestant(const PopulationModel& model, TrialRng& rng) {
  const auto expertise = draw_expertise(model, rng).categories;
  int correct = 0;
  for (int q = 0; q < kQuestionCount; ++q) {
    const std::size_t category = draw_category(model, rng);
    const bool expert =
        std::find(expertise.begin(), expertise.end(), category) != expertise.end();
    double p = model.non_expert_p;
    if (expert) {
      p = rng.bernoulli(model.expertise_sure_p) ? success_probability(Category::kSure)
                                                : success_probability(Category::kUnsure);
    }
    correct += rng.bernoulli(p) ? 1 : 0;
  }
  return correct;
}

Histogram14 run_population(const PopulationModel& model, const SimConfig& config) {
  validate(model);
  return run_trials(config, [&model](TrialRng& rng) { return simulate_contestant(model, rng); });
}

}  // namespace lucky13
