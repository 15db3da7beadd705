#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "polyvor/affine.hpp"
#include "polyvor/ball.hpp"
#include "polyvor/metrics.hpp"

namespace polyvor {

/// Floating-point evaluator for a planar polyhedral norm. The unit ball is
/// built exactly; each edge k contributes a linear functional l_k with
/// l_k = 1 on that edge, and D(x, y) = max_k l_k(y - x).
class PlanarNorm {
 public:
  static PlanarNorm from_metric(const FiniteMetric& d);
  static PlanarNorm from_generators(std::vector<DirectionVector> generators);

  double distance(const Point3& x, const Point3& y) const;

  /// Indices of edges attaining the maximum in distance(x, y) within `tol`
  /// (relative to the distance). One index: y - x points into the relative
  /// interior of that edge's cone; two: along a vertex ray.
  std::vector<std::size_t> active_edges(const Point3& x, const Point3& y, double tol = 1e-9) const;

  std::size_t facet_count() const { return functionals_.size(); }
  const std::vector<Point3>& functionals() const { return functionals_; }
  /// Unit ball centered at the barycenter (exact).
  const PolyBall& unit_ball() const { return unit_ball_; }
  /// Midpoint of edge k of the unit ball, as a displacement from its center.
  Point3 edge_midpoint(std::size_t k) const;

 private:
  explicit PlanarNorm(PolyBall unit_ball);

  PolyBall unit_ball_;
  std::vector<Point3> functionals_;
};

}  // namespace polyvor
