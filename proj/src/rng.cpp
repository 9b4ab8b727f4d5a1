#include "lucky13/rng.hpp"

#include <limits>

namespace lucky13 {
namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
    : engine_(seeded_engine(master_seed, trial_index)) {}

double TrialRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t TrialRng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

}  // namespace lucky13
