#include "lucky13/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lucky13/error.hpp"

namespace lucky13 {

Pmf13 Pmf13::point_mass(int k) {
  if (k < 0 || k > kQuestionCount) {
    throw InvalidInput("point mass outside 0..13: " + std::to_string(k));
  }
  Masses m{};
  m[static_cast<std::size_t>(k)] = 1.0;
  return Pmf13(m);
}

Pmf13 Pmf13::from_masses(const Masses& masses) {
  for (double v : masses) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidInput("PMF entries must be finite and non-negative");
    }
  }
  const double sum = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw InvalidInput("PMF does not sum to 1 (sum = " + std::to_string(sum) + ")");
  }
  return Pmf13(masses);
}

double Pmf13::at(int k) const {
  if (k < 0 || k > kQuestionCount) {
    throw InvalidInput("count outside 0..13: " + std::to_string(k));
  }
  return mass_[static_cast<std::size_t>(k)];
}

double Pmf13::total() const { return std::accumulate(mass_.begin(), mass_.end(), 0.0); }

double Pmf13::mean() const {
  double m = 0.0;
  for (int k = 0; k <= kQuestionCount; ++k) m += k * mass_[static_cast<std::size_t>(k)];
  return m;
}

double Pmf13::mass_between(int low, int high) const {
  low = std::max(low, 0);
  high = std::min(high, kQuestionCount);
  double p = 0.0;
  for (int k = low; k <= high; ++k) p += mass_[static_cast<std::size_t>(k)];
  return p;
}

Pmf13 Pmf13::shifted(int offset) const {
  Masses out{};
  for (int k = 0; k <= kQuestionCount; ++k) {
    const double v = mass_[static_cast<std::size_t>(k)];
    if (v == 0.0) continue;
    const int j = k + offset;
    if (j < 0 || j > kQuestionCount) {
      throw InvalidInput("shift moves probability mass outside 0..13");
    }
    out[static_cast<std::size_t>(j)] = v;
  }
  return Pmf13(out);
}

}  // namespace lucky13
