#include "polyvor/norm.hpp"

#include <algorithm>
#include <cmath>

#include "polyvor/error.hpp"

namespace polyvor {

PlanarNorm PlanarNorm::from_metric(const FiniteMetric& d) {
  if (d.n_states() != 3) throw Error(ErrorKind::DimensionMismatch, "planar norm needs three states");
  return PlanarNorm(build_ball(AffinePoint::barycenter(3), 1, d));
}

PlanarNorm PlanarNorm::from_generators(std::vector<DirectionVector> generators) {
  return PlanarNorm(build_ball(AffinePoint::barycenter(3), 1, std::move(generators)));
}

PlanarNorm::PlanarNorm(PolyBall unit_ball) : unit_ball_(std::move(unit_ball)) {
  if (!unit_ball_.planar() || unit_ball_.edges.size() < 4) {
    throw Error(ErrorKind::Infeasible, "generators do not span the plane");
  }
  for (const auto& edge : unit_ball_.edges) {
    // Outward normal scaled so that it evaluates to 1 on the edge.
    const DirectionVector outward = -edge.inward_normal;
    const DirectionVector offset = unit_ball_.hull_vertices[edge.from] - unit_ball_.center;
    Rational height = 0;
    for (std::size_t i = 0; i < 3; ++i) height += outward[i] * offset[i];
    Point3 f{};
    for (std::size_t i = 0; i < 3; ++i) f[i] = Rational(outward[i] / height).get_d();
    functionals_.push_back(f);
  }
}

double PlanarNorm::distance(const Point3& x, const Point3& y) const {
  const double w0 = y[0] - x[0];
  const double w1 = y[1] - x[1];
  const double w2 = y[2] - x[2];
  double best = 0.0;
  for (const auto& f : functionals_) best = std::max(best, f[0] * w0 + f[1] * w1 + f[2] * w2);
  return best;
}

std::vector<std::size_t> PlanarNorm::active_edges(const Point3& x, const Point3& y, double tol) const {
  const double dist = distance(x, y);
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < functionals_.size(); ++k) {
    const auto& f = functionals_[k];
    const double value = f[0] * (y[0] - x[0]) + f[1] * (y[1] - x[1]) + f[2] * (y[2] - x[2]);
    if (value >= dist - tol * std::max(1.0, dist)) active.push_back(k);
  }
  return active;
}

Point3 PlanarNorm::edge_midpoint(std::size_t k) const {
  const auto& edge = unit_ball_.edges.at(k);
  const DirectionVector a = unit_ball_.hull_vertices[edge.from] - unit_ball_.center;
  const DirectionVector b = unit_ball_.hull_vertices[edge.to] - unit_ball_.center;
  const DirectionVector mid = Rational(1, 2) * (a + b);
  const auto v = mid.to_doubles();
  return {v[0], v[1], v[2]};
}

}  // namespace polyvor
