#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "polyvor/rational.hpp"

namespace polyvor {

enum class Chart { Simplex, Hyperplane };

class DirectionVector;

/// Exact point of the affine hyperplane sum(t) = 1. With Chart::Simplex the
/// coordinates are additionally nonnegative (a probability distribution).
class AffinePoint {
 public:
  /// Throws NotInSimplex if the coordinates do not sum to 1 or any is negative.
  static AffinePoint simplex(std::vector<Rational> coords);
  /// Throws NotInSimplex if the coordinates do not sum to 1.
  static AffinePoint hyperplane(std::vector<Rational> coords);
  /// Uses the first size-1 doubles exactly and fills the last coordinate so
  /// that the sum is exactly one. Chart is Simplex when all coordinates are
  /// nonnegative.
  static AffinePoint from_doubles(const std::vector<double>& coords);
  /// Standard basis vector e_i (zero-based i) among `size` states.
  static AffinePoint vertex(std::size_t size, std::size_t i);
  static AffinePoint barycenter(std::size_t size);

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  Chart chart() const noexcept { return chart_; }
  bool in_simplex() const;

  std::vector<double> to_doubles() const;

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) { return a.coords_ == b.coords_; }

 private:
  AffinePoint(std::vector<Rational> coords, Chart chart) : coords_(std::move(coords)), chart_(chart) {}
  std::vector<Rational> coords_;
  Chart chart_;
};

/// Exact vector of the linear hyperplane sum(t) = 0.
class DirectionVector {
 public:
  DirectionVector() = default;
  /// Throws NotZeroSum unless the coordinates sum to 0.
  explicit DirectionVector(std::vector<Rational> coords);
  /// (e_i - e_j) / scale, zero-based indices.
  static DirectionVector basis_difference(std::size_t size, std::size_t i, std::size_t j,
                                          const Rational& scale = 1);

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const;
  std::vector<double> to_doubles() const;

  DirectionVector operator-() const;
  friend DirectionVector operator+(const DirectionVector& a, const DirectionVector& b);
  friend DirectionVector operator-(const DirectionVector& a, const DirectionVector& b);
  friend DirectionVector operator*(const Rational& s, const DirectionVector& v);
  friend bool operator==(const DirectionVector& a, const DirectionVector& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
};

DirectionVector operator-(const AffinePoint& a, const AffinePoint& b);
/// Result carries Chart::Simplex when it happens to be nonnegative.
AffinePoint operator+(const AffinePoint& p, const DirectionVector& v);

/// True iff u and v (zero-sum, same size) are linearly dependent.
bool parallel(const DirectionVector& u, const DirectionVector& v);

// ---------------------------------------------------------------------------
// Planar charts of the plane sum(t) = 1 in R^3.
//
// The exact chart is (t1, t2); it is an orientation-preserving linear image
// of the plotting chart, so orientation tests agree in both. The plotting
// chart (t1 + t2/2, sqrt(3)/2 t2) draws the simplex as the equilateral
// triangle with corners e3 = (0,0), e1 = (1,0), e2 = (1/2, sqrt(3)/2) and
// is a similarity of the plane (scale 1/sqrt(2)).

struct ExactPoint2 {
  Rational x;
  Rational y;
  friend bool operator==(const ExactPoint2&, const ExactPoint2&) = default;
};

/// Exact chart coordinates of a point or a direction of the plane.
ExactPoint2 exact_chart(const AffinePoint& p);
ExactPoint2 exact_chart(const DirectionVector& v);

/// Sign of the 2D cross product a x b: -1, 0 or +1.
int orientation(const ExactPoint2& a, const ExactPoint2& b);

using Point3 = std::array<double, 3>;

struct ChartPoint {
  double x = 0.0;
  double y = 0.0;
};

ChartPoint to_plot_chart(const Point3& t);
/// Linear part of to_plot_chart, for directions.
ChartPoint to_plot_chart_direction(const Point3& v);
Point3 from_plot_chart(const ChartPoint& c);
Point3 from_plot_chart_direction(const ChartPoint& c);

}  // namespace polyvor
