#include "polyvor/ball.hpp"

#include <gmpxx.h>

#include "polyvor/error.hpp"
#include "polyvor/hull.hpp"
#include "polyvor/transport.hpp"

namespace polyvor {
namespace {

DirectionVector planar_normal(const DirectionVector& edge) {
  // edge x (1,1,1): orthogonal to the edge and to the all-ones vector.
  return DirectionVector({edge[1] - edge[2], edge[2] - edge[0], edge[0] - edge[1]});
}

Rational dot(const DirectionVector& a, const DirectionVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ExactPoint2 chart_dir(const DirectionVector& v) { return exact_chart(v); }

Rational chart_dot(const ExactPoint2& a, const ExactPoint2& b) { return a.x * b.x + a.y * b.y; }

}  // namespace

std::vector<DirectionVector> ball_generators(const FiniteMetric& d) {
  const std::size_t m = d.n_states();
  std::vector<DirectionVector> gens;
  gens.reserve(m * (m - 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) gens.push_back(DirectionVector::basis_difference(m, i, j, d(i, j)));
    }
  }
  return gens;
}

std::size_t PolyBall::opposite_vertex(std::size_t i) const {
  const DirectionVector offset = hull_vertices.at(i) - center;
  const AffinePoint mirrored = center + (-offset);
  for (std::size_t k = 0; k < hull_vertices.size(); ++k) {
    if (hull_vertices[k] == mirrored) return k;
  }
  throw Error(ErrorKind::InvalidArgument, "ball is not centrally symmetric");
}

PolyBall build_ball(const AffinePoint& center, const Rational& radius, std::vector<DirectionVector> generators) {
  if (radius <= 0) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
  for (const auto& g : generators) {
    if (g.size() != center.size()) throw Error(ErrorKind::DimensionMismatch, "generator size mismatch");
  }
  PolyBall ball{center, radius, std::move(generators), {}, {}};
  if (center.size() != 3) return ball;

  std::vector<AffinePoint> points;
  std::vector<ExactPoint2> chart;
  points.reserve(ball.generators.size());
  for (const auto& g : ball.generators) {
    points.push_back(center + radius * g);
    chart.push_back(exact_chart(points.back()));
  }
  for (std::size_t idx : convex_hull(chart)) ball.hull_vertices.push_back(points[idx]);

  const std::size_t k = ball.hull_vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    DirectionVector normal = planar_normal(ball.hull_vertices[j] - ball.hull_vertices[i]);
    if (dot(normal, center - ball.hull_vertices[i]) < 0) normal = -normal;
    ball.edges.push_back({i, j, std::move(normal)});
  }
  return ball;
}

PolyBall build_ball(const AffinePoint& center, const Rational& radius, const FiniteMetric& d) {
  if (center.size() != d.n_states()) throw Error(ErrorKind::DimensionMismatch, "center and metric sizes differ");
  return build_ball(center, radius, ball_generators(d));
}

std::vector<Face> ball_faces(const PolyBall& ball) {
  if (!ball.planar()) throw Error(ErrorKind::DimensionMismatch, "face lattice is only built for planar balls");
  const std::size_t k = ball.hull_vertices.size();
  std::vector<Face> faces;
  faces.reserve(1 + 2 * k);
  faces.push_back({-1, {}, 0});
  for (std::size_t i = 0; i < k; ++i) faces.push_back({0, {i}, 1 + ball.opposite_vertex(i)});
  for (std::size_t e = 0; e < k; ++e) {
    const auto& edge = ball.edges[e];
    // Central symmetry is a half-turn, so it preserves counterclockwise
    // order: the edge opposite to (i, i+1) starts at the mirror of i.
    const std::size_t opposite_edge = ball.opposite_vertex(edge.from);
    faces.push_back({1, {edge.from, edge.to}, 1 + k + opposite_edge});
  }
  return faces;
}

bool face_cone_membership(const AffinePoint& x, const PolyBall& ball, const Face& face, const AffinePoint& y) {
  if (x.size() != 3 || y.size() != 3) throw Error(ErrorKind::DimensionMismatch, "face cones are planar");
  const DirectionVector offset = y - x;
  if (face.dim < 0) return offset.is_zero();
  if (offset.is_zero()) return false;

  const auto faces = ball_faces(ball);
  const Face& opposite = faces.at(face.opposite);
  const ExactPoint2 u = chart_dir(offset);
  if (opposite.dim == 0) {
    const ExactPoint2 w = chart_dir(ball.hull_vertices[opposite.vertex_indices[0]] - ball.center);
    return orientation(w, u) == 0 && chart_dot(w, u) > 0;
  }
  const ExactPoint2 a = chart_dir(ball.hull_vertices[opposite.vertex_indices[0]] - ball.center);
  const ExactPoint2 b = chart_dir(ball.hull_vertices[opposite.vertex_indices[1]] - ball.center);
  const int span = orientation(a, b);
  return span != 0 && orientation(a, u) == span && orientation(u, b) == span;
}

bool truncated_face_cone_membership(const AffinePoint& x, const PolyBall& ball, const Face& face,
                                    const AffinePoint& y, const Rational& epsilon) {
  if (!face_cone_membership(x, ball, face, y)) return false;
  return gauge_distance(x, y, ball.generators) < epsilon;
}

std::uint64_t facet_count_bound(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 1");
  if (n > 33) throw Error(ErrorKind::TooLarge, "C(2n, n) overflows 64 bits for n > 33");
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), 2 * n, n);
  return result.get_ui();
}

std::vector<DirectionVector> edge_directions(const FiniteMetric& d) {
  if (d.n_states() != 3) throw Error(ErrorKind::DimensionMismatch, "edge directions need three states");
  const auto g = [&](std::size_t i, std::size_t j) {
    return DirectionVector::basis_difference(3, i - 1, j - 1, d.d(i, j));
  };
  return {g(1, 2) - g(1, 3), g(1, 3) - g(2, 3), g(1, 2) - g(3, 2)};
}

}  // namespace polyvor
