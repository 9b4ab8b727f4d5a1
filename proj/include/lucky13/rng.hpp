#pragma once

#include <cstdint>
#include <random>

namespace lucky13 {

// Per-trial random stream.
//
// Each trial owns a std::mt19937_64 seeded through std::seed_seq from the
// 32-bit halves of (master seed, trial index). Both engines and seed_seq are
// fully specified by the standard, and the helpers below avoid the
// implementation-defined std::*_distribution classes, so a (seed, trial)
// pair yields the same draws on every platform and for any thread count.
class TrialRng {
 public:
  TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lucky13
