#pragma once

// Reference computations used only by tests. They deliberately avoid the
// library's PMF code paths.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace lucky13::testing {

// P(N = k) by enumerating all 2^n outcome vectors.
inline std::array<double, 14> enumerate_pmf(std::span<const double> p) {
  std::array<double, 14> out{};
  const std::size_t n = p.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double prob = 1.0;
    int correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prob *= p[i];
        ++correct;
      } else {
        prob *= 1.0 - p[i];
      }
    }
    out[static_cast<std::size_t>(correct)] += prob;
  }
  return out;
}

inline std::vector<double> category_vector(int s, int u, int g) {
  std::vector<double> p;
  p.insert(p.end(), static_cast<std::size_t>(s), 1.0);
  p.insert(p.end(), static_cast<std::size_t>(u), 0.75);
  p.insert(p.end(), static_cast<std::size_t>(g), 0.5);
  return p;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace lucky13::testing
