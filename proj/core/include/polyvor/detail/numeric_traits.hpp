#pragma once

#include <cmath>

#include "polyvor/rational.hpp"

namespace polyvor::detail {

/// Tolerances used by the simplex solvers. The exact instantiation compares
/// against zero; the float one uses the raster-path tolerances.
template <class T>
struct Tolerance;

template <>
struct Tolerance<Rational> {
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static bool negative_reduced_cost(const Rational& v) { return sgn(v) < 0; }
  static bool positive(const Rational& v) { return sgn(v) > 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct Tolerance<double> {
  static constexpr double kFeasibility = 1e-12;
  static constexpr double kOptimality = 1e-9;
  static bool is_zero(double v) { return std::abs(v) <= kFeasibility; }
  static bool negative_reduced_cost(double v) { return v < -kOptimality; }
  static bool positive(double v) { return v > kFeasibility; }
  static bool equal(double a, double b) { return std::abs(a - b) <= kFeasibility; }
};

}  // namespace polyvor::detail
