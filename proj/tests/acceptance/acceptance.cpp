// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lucky13/prob_core.hpp"
#include "lucky13/replay.hpp"
#include "lucky13/rng.hpp"
#include "lucky13/simulation.hpp"
#include "lucky13/strategy.hpp"
#include "lucky13/tracker.hpp"
#include "support/oracles.hpp"
#include "support/reference_tables.hpp"

using namespace lucky13;
using lucky13::testing::choose;

namespace {

const std::string kData = LUCKY13_DATA_DIR;

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 4) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: got %.10g want %.10g +- %g", what.c_str(), actual, expected, tol);
    expect(std::abs(actual - expected) <= tol, buf);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::string out = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks";
    for (const auto& n : notes_) out += "; " + n;
    for (const auto& f : failures_) out += "; FAILED " + f;
    return out;
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

Pmf13 counts_pmf(int s, int u, int g) { return exact_pmf(QuestionProfile::from_counts(s, u, g)); }

double round4(double p) { return std::round(p * 1e4) / 1e4; }

std::string choice_string(const lucky13::testing::PublishedChoice& c) {
  return std::string(c.range) + "/" + (c.number ? std::to_string(*c.number) : "NA");
}

bool has_tie(const Recommendation& rec, const std::string& bet) {
  return std::any_of(rec.ties.begin(), rec.ties.end(), [&](const Bet& b) { return to_string(b) == bet; });
}

std::vector<QuestionRef> remaining_refs(const GameState& state) {
  std::vector<QuestionRef> refs;
  const auto& pool = state.remaining();
  if (pool.is_categorical()) {
    for (Category c : {Category::kSure, Category::kUnsure, Category::kGuess}) {
      if (pool.counts().count(c) > 0) refs.emplace_back(c);
    }
  } else {
    for (double p : pool.probabilities()) refs.emplace_back(p);
  }
  return refs;
}

std::vector<double> random_vector(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> dist(0.5, 1.0);
  std::vector<double> p(n);
  for (auto& x : p) x = dist(gen);
  return p;
}

Check all_guess_winnings() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto pmf = counts_pmf(0, 0, 13);
  const auto prizes = PrizeSchedule::standard();
  // Range sums of binomial coefficients over 2^13.
  const std::uint64_t numerators[] = {choose(13, 1) + choose(13, 2) + choose(13, 3),
                                      choose(13, 4) + choose(13, 5) + choose(13, 6),
                                      choose(13, 7) + choose(13, 8) + choose(13, 9),
                                      choose(13, 10) + choose(13, 11) + choose(13, 12), choose(13, 13)};
  const double published[] = {230.0, 6808.5, 11347.5, 4600.0, 100.0};
  for (std::size_t i = 0; i < kAllRanges.size(); ++i) {
    const auto r = kAllRanges[i];
    const auto name = std::string(to_string(r));
    const double exact_p = static_cast<double>(numerators[i]) / 8192.0;
    c.near(range_probability(pmf, r), exact_p, 1e-9, "P(" + name + ")");
    const double ew = expected_winnings(pmf, {r, std::nullopt});
    c.near(ew, prizes.prize(r) * exact_p, 1e-9, "exact EW " + name);
    c.near(prizes.prize(r) * round4(range_probability(pmf, r)), published[i], 0.5, "rounded EW " + name);
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + fmt("%.3fs", elapsed));
  c.note("runtime " + fmt("%.4fs", elapsed));
  return c;
}

Check three_sure_ranges() {
  Check c;
  const auto pmf = counts_pmf(3, 0, 10);
  const double published[] = {0.0009, 0.1709, 0.6563, 0.1709, 0.0009};
  for (std::size_t i = 0; i < kAllRanges.size(); ++i) {
    // Reference values carry four decimals; 0.65625 sits exactly on the half-unit.
    c.near(range_probability(pmf, kAllRanges[i]), published[i], 5e-5 * (1.0 + 1e-9),
           "P(" + std::string(to_string(kAllRanges[i])) + ")");
  }
  return c;
}

Check contestant_z_probabilities() {
  Check c;
  const auto pmf = counts_pmf(10, 2, 1);
  c.near(range_probability(pmf, LuckyRange::k13), 9.0 / 32.0, 1e-12, "P(13)");
  c.near(range_probability(pmf, LuckyRange::k10to12), 23.0 / 32.0, 1e-12, "P(10-12)");
  c.near(pmf[10], 1.0 / 32.0, 1e-12, "P(N=10)");
  c.near(pmf[11], 7.0 / 32.0, 1e-12, "P(N=11)");
  c.near(pmf[12], 15.0 / 32.0, 1e-12, "P(N=12)");
  return c;
}

void check_rows(Check& c, const std::vector<lucky13::testing::PublishedRow>& published,
                const std::vector<StrategyRow>& rows, int* footnotes) {
  for (const auto& want : published) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const StrategyRow& r) {
      return r.counts.sure == want.s && r.counts.unsure == want.u && r.counts.guess == want.g;
    });
    const auto label = std::to_string(want.s) + "/" + std::to_string(want.u) + "/" + std::to_string(want.g);
    if (it == rows.end()) {
      c.expect(false, label + " missing");
      continue;
    }
    c.expect(to_string(it->win_probability.bet) == choice_string(want.win_probability),
             label + " winprob " + to_string(it->win_probability.bet));
    c.expect(to_string(it->expected_winnings.bet) == choice_string(want.expected_winnings),
             label + " winnings " + to_string(it->expected_winnings.bet));
    if (want.footnote_tie) {
      c.expect(has_tie(it->win_probability, want.footnote_tie), label + " tie " + want.footnote_tie);
      if (footnotes) ++*footnotes;
    }
  }
}

Check two_category_table() {
  Check c;
  const auto rows = strategy_table_two_category();
  c.expect(rows.size() == 14, "row count");
  int footnotes = 0;
  check_rows(c, lucky13::testing::published_two_category_rows(), rows, &footnotes);
  c.expect(footnotes == 3, "three footnoted ties");
  return c;
}

Check three_category_table() {
  Check c;
  const auto rows = strategy_table_three_category();
  c.expect(rows.size() == 105, "row count " + std::to_string(rows.size()));
  std::set<std::tuple<int, int, int>> distinct;
  for (const auto& r : rows) distinct.insert({r.counts.sure, r.counts.unsure, r.counts.guess});
  c.expect(distinct.size() == 105, "distinct profiles");
  const auto& published = lucky13::testing::selected_three_category_rows();
  c.expect(published.size() == 24, "24 published rows");
  check_rows(c, published, rows, nullptr);
  for (const auto& r : rows) {
    c.expect(r.win_probability.bet.range != LuckyRange::k1to3, "winprob picks 1-3");
    c.expect(r.expected_winnings.bet.range != LuckyRange::k1to3, "winnings picks 1-3");
  }
  return c;
}

Check contestant_b() {
  Check c;
  const auto file = load_replay(kData + "/case_b.json");
  auto state = GameState::new_game(file.profile, file.bet);
  c.near(state.current_point().expected_winnings, 68665.41, 0.01, "initial");
  for (int i = 0; i < 9; ++i) {
    c.expect(file.reveals[static_cast<std::size_t>(i)].correct, "reveal correct");
    state = state.reveal(file.reveals[static_cast<std::size_t>(i)].question, file.reveals[static_cast<std::size_t>(i)].correct);
  }
  const auto point = state.current_point();
  c.expect(point.correct_so_far == 9, "nine correct");
  c.near(point.expected_winnings, 85156.25, 1e-9, "after nine");
  c.near(point.range_probability, 25.0 / 32.0, 1e-12, "P(range)");
  c.near(point.number_probability, 9.0 / 32.0, 1e-12, "P(number)");
  const auto offer = state.evaluate_offer(40000.0).evaluation;
  c.expect(offer.advice == OfferAdvice::kReject, "offer advice");
  c.near(offer.continuation_value, 85156.25, 1e-9, "continuation");
  return c;
}

Check contestant_c() {
  Check c;
  const auto file = load_replay(kData + "/case_c.json");
  auto state = GameState::new_game(file.profile, file.bet);
  c.near(state.current_point().expected_winnings, 20866.0, 1.0, "initial");
  for (int i = 0; i < 4; ++i) {
    const auto& r = file.reveals[static_cast<std::size_t>(i)];
    c.expect(r.correct, "reveal correct");
    state = state.reveal(r.question, r.correct);
  }
  const auto left = state.remaining().counts();
  c.expect(left.sure == 1 && left.unsure == 4 && left.guess == 4, "remaining 1/4/4");
  const auto point = state.current_point();
  c.near(point.expected_winnings, 13916.0, 1.0, "after four");
  c.near(point.range_probability, 0.34, 0.005, "P(range)");
  c.near(point.number_probability, 0.22, 0.005, "P(number)");
  c.expect(state.evaluate_offer(5000.0).evaluation.advice == OfferAdvice::kReject, "offer advice");
  const auto what_if = GameState::new_game(file.profile, {LuckyRange::k10to12, 10});
  c.near(what_if.current_point().expected_winnings, 37210.0, 1.0, "what-if initial");
  return c;
}

Check mode_intervals() {
  Check c;
  struct Interval {
    std::vector<int> modes;
    double lo, hi;
    bool lo_closed, hi_closed;
  };
  // Published endpoints to the printed precision.
  const std::vector<Interval> table = {
      {{13}, 12.5, 13.0, false, true},        {{12, 13}, 12.071, 12.5, true, true},
      {{12}, 11.667, 12.071, false, false},   {{11, 12}, 11.077, 11.667, true, true},
      {{11}, 10.75, 11.077, false, false},    {{10, 11}, 10.0833, 10.75, true, true},
      {{10}, 9.8, 10.0833, false, false},     {{9, 10}, 9.091, 9.8, true, true},
      {{9}, 8.833, 9.091, false, false},      {{8, 9}, 8.1, 8.833, true, true},
      {{8}, 7.857, 8.1, false, false},        {{7, 8}, 7.111, 7.857, true, true},
      {{7}, 6.875, 7.111, false, false},      {{6, 7}, 6.125, 6.875, true, true},
      {{6}, 5.888, 6.125, false, false},
  };
  constexpr int n = 13;
  // Exact boundaries: k + 1/(k+2) opens the two-mode band, k + 1 - 1/(n-k+1) closes it.
  auto exact = [](double published) {
    double best = published;
    double err = INFINITY;
    for (int k = 0; k < n; ++k) {
      for (double b : {k + 1.0 / (k + 2), k + 1.0 - 1.0 / (n - k + 1), static_cast<double>(k + 1)}) {
        if (std::abs(b - published) < err) {
          err = std::abs(b - published);
          best = b;
        }
      }
    }
    return best;
  };
  constexpr double kStep = 1e-9;
  for (const auto& iv : table) {
    const double lo = exact(iv.lo), hi = exact(iv.hi);
    const auto label = "[" + fmt("%g", iv.lo) + "," + fmt("%g", iv.hi) + "]";
    c.expect(std::abs(lo - iv.lo) < 1e-3 && std::abs(hi - iv.hi) < 1e-3, label + " endpoints");
    for (double mu : {iv.lo_closed ? lo : lo + kStep, (lo + hi) / 2.0, iv.hi_closed ? hi : hi - kStep}) {
      c.expect(darroch_bracket(mu, n).modes == iv.modes, label + " at mu=" + fmt("%.12g", mu));
    }
    // Just outside each end belongs to the neighbouring interval.
    if (!iv.lo_closed) c.expect(darroch_bracket(lo, n).modes != iv.modes, label + " excludes lower end");
    if (!iv.hi_closed && hi < n) c.expect(darroch_bracket(hi, n).modes != iv.modes, label + " excludes upper end");
  }
  // The vector form reads n from the vector.
  std::vector<double> p(n, 1.0);
  p[11] = 0.5;
  p[12] = 0.8;
  c.expect(darroch_mode(p).modes == (std::vector<int>{12, 13}), "vector with mean 12.3");
  c.note("15 intervals at n=13");
  return c;
}

// The criterion as stated: every mode the rule returns is an argmax of the exact PMF.
Check mode_rule_random() {
  Check c;
  std::mt19937_64 gen(2024);
  int violations = 0, bracket_holds = 0, singletons = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const auto p = random_vector(gen, 13);
    const auto rule = darroch_mode(p);
    const auto argmax = pmf_argmax(poisson_binomial_pmf(p));
    const bool subset = std::all_of(rule.modes.begin(), rule.modes.end(), [&](int m) {
      return std::find(argmax.begin(), argmax.end(), m) != argmax.end();
    });
    const bool within = std::all_of(rule.modes.begin(), rule.modes.end(),
                                    [&](int m) { return std::abs(m - rule.mean) <= 1.0 + 1e-12; });
    const bool contains = std::all_of(argmax.begin(), argmax.end(), [&](int m) {
      return std::find(rule.modes.begin(), rule.modes.end(), m) != rule.modes.end();
    });
    if (!subset) ++violations;
    if (contains) ++bracket_holds;
    if (rule.modes.size() == 1) ++singletons;
    c.expect(subset, "rule mode outside argmax at mean " + fmt("%.6f", rule.mean));
    c.expect(within, "|m - mu| > 1");
  }
  c.note(std::to_string(violations) + " two-mode brackets with a unique true mode");
  c.note("argmax within rule set " + std::to_string(bracket_holds) + "/1000");
  c.note(std::to_string(singletons) + " single-mode cases");
  return c;
}

Check monte_carlo() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto profile = QuestionProfile::from_counts(10, 2, 1);
  const auto pmf = exact_pmf(profile);
  SimConfig config;
  config.trials = 10000;
  config.seed = 42;
  config.threads = 1;
  const auto base = simulate_profile(profile, config);
  for (auto r : kAllRanges) {
    c.near(base.range_frequency(r), range_probability(pmf, r), 0.015, "freq " + std::string(to_string(r)));
  }
  c.expect(simulate_profile(profile, config) == base, "repeat run");
  for (unsigned threads : {2u, 3u, 4u, 8u}) {
    config.threads = threads;
    c.expect(simulate_profile(profile, config) == base, std::to_string(threads) + " threads");
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "runtime " + fmt("%.3fs", elapsed));
  c.note("P(13) ~ " + fmt("%.4f", base.range_frequency(LuckyRange::k13)));
  c.note("runtime " + fmt("%.3fs", elapsed));
  return c;
}

Check population() {
  Check c;
  const auto model = PopulationModel::standard();
  SimConfig config;
  config.trials = 10000;
  config.seed = 7;
  const auto hist = run_population(model, config);
  const int mode = hist.mode();
  c.expect(mode >= 6 && mode <= 8, "mode " + std::to_string(mode));
  double sum = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    TrialRng rng(11, static_cast<std::uint64_t>(i));
    sum += draw_expertise(model, rng).drawn;
  }
  c.near(sum / kDraws, 2.5, 0.05, "mean Q");
  c.note("mode " + std::to_string(mode));
  c.note("mean Q " + fmt("%.4f", sum / kDraws));
  return c;
}

Check property_suite() {
  Check c;
  std::mt19937_64 gen(17);

  // Normalization.
  bool normalized = true;
  for (int s = 0; s <= 13; ++s) {
    for (int u = 0; s + u <= 13; ++u) {
      const auto pmf = counts_pmf(s, u, 13 - s - u);
      normalized = normalized && std::abs(pmf.total() - 1.0) <= 1e-12 &&
                   std::all_of(pmf.masses().begin(), pmf.masses().end(), [](double m) { return m >= 0.0; });
    }
  }
  for (int rep = 0; rep < 200; ++rep) {
    const auto pmf = poisson_binomial_pmf(random_vector(gen, 13));
    normalized = normalized && std::abs(pmf.total() - 1.0) <= 1e-12;
  }
  c.expect(normalized, "normalization");

  // Binomial reduction.
  bool reduces = true;
  for (double p : {0.5, 0.6, 0.75, 0.9, 1.0}) {
    const auto a = exact_pmf(QuestionProfile::from_probabilities(std::vector<double>(13, p)));
    const auto b = binomial_pmf(13, p);
    for (int k = 0; k <= 13; ++k) reduces = reduces && std::abs(a[k] - b[k]) <= 1e-12;
  }
  c.expect(reduces, "binomial reduction");

  // Brute-force equivalence, every n up to 13.
  bool brute = true;
  for (std::size_t n = 1; n <= 13; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto p = random_vector(gen, n);
      const auto oracle = lucky13::testing::enumerate_pmf(p);
      const auto pmf = poisson_binomial_pmf(p);
      for (int k = 0; k <= 13; ++k) brute = brute && std::abs(pmf[k] - oracle[static_cast<std::size_t>(k)]) <= 1e-10;
    }
  }
  for (int s = 0; s <= 13; ++s) {
    for (int u = 0; s + u <= 13; ++u) {
      const auto oracle = lucky13::testing::enumerate_pmf(lucky13::testing::category_vector(s, u, 13 - s - u));
      const auto pmf = counts_pmf(s, u, 13 - s - u);
      for (int k = 0; k <= 13; ++k) brute = brute && std::abs(pmf[k] - oracle[static_cast<std::size_t>(k)]) <= 1e-10;
    }
  }
  c.expect(brute, "brute-force oracle");

  // Martingale.
  double worst = 0.0;
  std::uniform_int_distribution<int> coin(0, 1);
  const std::vector<std::pair<QuestionProfile, Bet>> games = {
      {QuestionProfile::from_counts(3, 8, 2), {LuckyRange::k10to12, 11}},
      {QuestionProfile::from_counts(1, 7, 5), {LuckyRange::k7to9, 9}},
      {QuestionProfile::from_counts(0, 0, 13), {LuckyRange::k4to6, 6}},
      {QuestionProfile::from_probabilities(random_vector(gen, 13)), {LuckyRange::k13, std::nullopt}},
  };
  for (const auto& [profile, bet] : games) {
    for (int rep = 0; rep < 10; ++rep) {
      auto state = GameState::new_game(profile, bet);
      while (!state.is_complete()) {
        const double now = state.current_point().expected_winnings;
        const auto refs = remaining_refs(state);
        for (const auto& ref : refs) {
          const double q = success_probability(ref);
          const double up = state.reveal(ref, true).current_point().expected_winnings;
          const double down = state.reveal(ref, false).current_point().expected_winnings;
          worst = std::max(worst, std::abs(q * up + (1.0 - q) * down - now));
        }
        std::uniform_int_distribution<std::size_t> pick(0, refs.size() - 1);
        state = state.reveal(refs[pick(gen)], coin(gen) == 1);
      }
    }
  }
  c.expect(worst <= 1e-8, "martingale " + fmt("%.3g", worst));

  // Reveal-order independence.
  bool order_free = true;
  for (const char* name : {"/case_b.json", "/case_c.json"}) {
    const auto file = load_replay(kData + name);
    const auto reference = run_replay(file).state.conditional_pmf();
    auto reveals = file.reveals;
    for (int rep = 0; rep < 20; ++rep) {
      std::shuffle(reveals.begin(), reveals.end(), gen);
      for (std::size_t cut = 0; cut <= reveals.size(); cut += 4) {
        auto a = GameState::new_game(file.profile, file.bet);
        auto b = a;
        for (std::size_t i = 0; i < cut; ++i) a = a.reveal(reveals[i].question, reveals[i].correct);
        for (std::size_t i = cut; i-- > 0;) b = b.reveal(reveals[i].question, reveals[i].correct);
        for (int k = 0; k <= 13; ++k) order_free = order_free && std::abs(a.conditional_pmf()[k] - b.conditional_pmf()[k]) <= 1e-12;
      }
      auto full = GameState::new_game(file.profile, file.bet);
      for (const auto& r : reveals) full = full.reveal(r.question, r.correct);
      for (int k = 0; k <= 13; ++k) order_free = order_free && full.conditional_pmf()[k] == reference[k];
    }
  }
  c.expect(order_free, "reveal-order independence");
  c.note("max martingale gap " + fmt("%.2g", worst));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"All-guess expected winnings per range", all_guess_winnings},
      {"Range probabilities for 3 sure, 10 guess", three_sure_ranges},
      {"Exact probabilities for 10 sure, 2 unsure, 1 guess", contestant_z_probabilities},
      {"Two-category strategy table (14 rows, both utilities, reported ties)", two_category_table},
      {"Three-category strategy table (24 listed rows, 105 profiles, never 1-3)", three_category_table},
      {"Contestant B game checkpoints", contestant_b},
      {"Contestant C game checkpoints", contestant_c},
      {"Mode rule intervals at n=13 (15 intervals)", mode_intervals},
      {"Mode rule on 1000 random vectors is a subset of the exact argmax", mode_rule_random},
      {"Monte Carlo accuracy, determinism and runtime", monte_carlo},
      {"Population model mode and expertise count", population},
      {"Property suite", property_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    if (!result.ok()) ++failed;
    std::printf("%s  %s  [%s]\n", result.ok() ? "PASS" : "FAIL", name, result.detail().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
