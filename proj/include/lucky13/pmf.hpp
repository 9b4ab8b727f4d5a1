#pragma once

#include <array>
#include <cstddef>

namespace lucky13 {

inline constexpr int kQuestionCount = 13;

// Probability mass function over the number of correct answers, 0..13.
//
// Always dense: entries above the support of a sub-distribution are zero.
// Construction through from_masses() validates non-negativity and
// normalization (|sum - 1| <= 1e-12).
class Pmf13 {
 public:
  using Masses = std::array<double, kQuestionCount + 1>;

  static constexpr double kNormTolerance = 1e-12;

  // Point mass at zero correct answers.
  Pmf13() { mass_[0] = 1.0; }

  static Pmf13 point_mass(int k);
  static Pmf13 from_masses(const Masses& masses);

  double operator[](int k) const { return mass_[static_cast<std::size_t>(k)]; }
  double at(int k) const;
  const Masses& masses() const { return mass_; }

  double total() const;
  double mean() const;
  // Sum of mass over the inclusive interval [low, high], clamped to 0..13.
  double mass_between(int low, int high) const;

  // Distribution of N + offset; throws if mass would leave 0..13.
  Pmf13 shifted(int offset) const;

  friend bool operator==(const Pmf13&, const Pmf13&) = default;

 private:
  explicit Pmf13(const Masses& masses) : mass_(masses) {}

  Masses mass_{};
};

}  // namespace lucky13
