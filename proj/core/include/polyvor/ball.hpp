#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyvor/affine.hpp"
#include "polyvor/metrics.hpp"

namespace polyvor {

/// The 2 * C(n+1, 2) vectors (e_i - e_j) / d_ij, i != j, in row-major (i, j)
/// order. Consecutive entries are not paired; every vector's negative is
/// also present.
std::vector<DirectionVector> ball_generators(const FiniteMetric& d);

struct BallEdge {
  std::size_t from = 0;  ///< index into hull_vertices
  std::size_t to = 0;    ///< next vertex counterclockwise
  DirectionVector inward_normal;
};

/// Closed polyhedral ball conv{center + radius * g}. For three states the
/// extreme points are computed exactly and stored counterclockwise together
/// with their edges; in higher dimension only the generators are kept.
struct PolyBall {
  AffinePoint center;
  Rational radius;
  std::vector<DirectionVector> generators;
  std::vector<AffinePoint> hull_vertices;
  std::vector<BallEdge> edges;

  bool planar() const { return !hull_vertices.empty(); }
  std::size_t facet_count() const { return edges.size(); }
  /// Index of the vertex 2 * center - hull_vertices[i].
  std::size_t opposite_vertex(std::size_t i) const;
};

/// Builds the ball from an arbitrary centrally symmetric generator list.
PolyBall build_ball(const AffinePoint& center, const Rational& radius, std::vector<DirectionVector> generators);
PolyBall build_ball(const AffinePoint& center, const Rational& radius, const FiniteMetric& d);

/// A proper face of a planar ball: the empty face (dim -1), a vertex (dim 0)
/// or an edge (dim 1). `opposite` indexes the face -F in the list returned
/// by ball_faces.
struct Face {
  int dim = -1;
  std::vector<std::size_t> vertex_indices;
  std::size_t opposite = 0;
};

/// Empty face first, then one face per vertex, then one per edge.
std::vector<Face> ball_faces(const PolyBall& ball);

/// Membership of y in the face cone C_F(x) = {x + t(s - x) : s in int(-F), t > 0},
/// where the face is taken from `ball` translated to be centered at x.
/// For the empty face the cone is {x}.
bool face_cone_membership(const AffinePoint& x, const PolyBall& ball, const Face& face, const AffinePoint& y);

/// Truncated cone C_{F,eps}(x): face-cone membership plus gauge(x, y) < eps.
bool truncated_face_cone_membership(const AffinePoint& x, const PolyBall& ball, const Face& face,
                                    const AffinePoint& y, const Rational& epsilon);

/// Maximum number of facets of a Wasserstein ball in dimension n: C(2n, n).
std::uint64_t facet_count_bound(std::size_t n);

/// Candidate edge directions of a planar Wasserstein ball, in the order
///   (a) (e1-e2)/d12 - (e1-e3)/d13
///   (b) (e1-e3)/d13 - (e2-e3)/d23
///   (c) (e1-e2)/d12 - (e3-e2)/d23
/// Throws DimensionMismatch unless d has three states.
std::vector<DirectionVector> edge_directions(const FiniteMetric& d);

}  // namespace polyvor
