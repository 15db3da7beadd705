#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyvor/affine.hpp"
#include "polyvor/metrics.hpp"

namespace polyvor {

/// A planar curve p in [0, 1] -> plane sum(t) = 1 of three states, with its
/// derivative. Evaluation is floating point; exact counterparts exist for
/// the Hardy-Weinberg curve below.
struct ParametricCurve {
  std::string name;
  std::function<Point3(double)> eval;
  std::function<Point3(double)> tangent;
  /// Degree of the dual of the projective closure, when known.
  std::optional<int> dual_degree;
  /// eval(0) == eval(1) for closed curves.
  bool closed = false;
};

/// p -> (p^2, 2p(1-p), (1-p)^2); dual degree 2 (smooth conic).
ParametricCurve hardy_weinberg_curve();

/// Circle of the given radius around `center` in the plotting chart,
/// p -> center + radius (cos 2 pi p, sin 2 pi p). Dual degree 2.
ParametricCurve circle_curve(const ChartPoint& center, double radius);

/// Exact Veronese point (p^n, n p^{n-1}(1-p), ..., (1-p)^n) of the
/// binomial distribution. Throws ParameterOutOfRange unless 0 <= p <= 1.
AffinePoint veronese_point(std::size_t n, const Rational& p);

/// Exact tangent (2p, 2 - 4p, 2p - 2) of the Hardy-Weinberg curve.
DirectionVector hw_tangent(const Rational& p);

enum class EdgeCase { A, B, C };

std::string_view to_string(EdgeCase c);

struct TangencyEntry {
  Rational p_star;
  EdgeCase edge_case;
  DirectionVector direction;
};

/// An equality stratum (d12 = d13 or d23 = d13) where tangency falls on an
/// endpoint of the curve rather than its interior.
struct DegenerateCondition {
  EdgeCase edge_case;
  std::string condition;
  Rational boundary_parameter;
};

struct TangencyReport {
  std::vector<TangencyEntry> entries;  ///< sorted by p_star
  std::vector<DegenerateCondition> degenerate;
};

/// Interior points of the Hardy-Weinberg curve whose tangent is parallel to
/// one of the three edge directions of the Wasserstein ball of d:
///   (a) p* = (d12 - d13) / (2 d12 - d13)          when d12 > d13
///   (b) 1 - p* = (d23 - d13) / (2 d23 - d13)      when d23 > d13
///   (c) p* = d23 / (d12 + d23)                    always
TangencyReport hw_tangency_points(const FiniteMetric& d);

/// Numeric tangency: interior roots of cross(tangent(p), direction) in the
/// planar chart, bracketed by sign changes over `bracket_count` equal
/// subintervals and refined by bisection to 1e-12.
std::vector<double> planar_tangency_points(const ParametricCurve& curve, const DirectionVector& direction,
                                           std::size_t bracket_count = 256);

/// Unit normal, in the plotting chart, of lines parallel to `direction`.
ChartPoint chart_normal(const DirectionVector& direction);

}  // namespace polyvor
