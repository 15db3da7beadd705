#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyvor/affine.hpp"
#include "polyvor/ball.hpp"
#include "polyvor/curve.hpp"
#include "polyvor/norm.hpp"

namespace polyvor {

/// Finite discretization of a curve.
struct CurveSample {
  std::vector<double> params;  ///< strictly increasing in [0, 1]
  std::vector<Point3> points;
  std::size_t count() const { return points.size(); }
  /// Largest distance between consecutive samples under `norm`.
  double max_step(const PlanarNorm& norm) const;
};

/// `count` uniformly spaced parameters including both endpoints.
CurveSample sample_curve(const ParametricCurve& curve, std::size_t count);

/// Sample consisting of one point (parameter 0).
CurveSample single_point_sample(const Point3& point);

constexpr std::int32_t kOutsideLabel = -1;
constexpr std::int32_t kTieLabel = -2;
constexpr double kDefaultTieTolerance = 1e-9;

/// Index of the sample point strictly nearest to y, or kTieLabel when the
/// two smallest distances differ by less than tie_tolerance. Sample points
/// that coincide exactly (the closing point of a closed curve) are not
/// counted as competitors of each other; the lower index wins.
std::int32_t classify(const Point3& y, const CurveSample& sample, const PlanarNorm& norm,
                      double tie_tolerance = kDefaultTieTolerance);
std::int32_t classify(const Point3& y, const CurveSample& sample, const FiniteMetric& d,
                      double tie_tolerance = kDefaultTieTolerance);

/// R x R label image over the unit square of the plotting chart; row 0 is
/// the top row. Pixels whose centers fall outside the simplex carry
/// kOutsideLabel.
struct VoronoiRaster {
  std::size_t resolution = 0;
  double tie_tolerance = kDefaultTieTolerance;
  std::vector<std::int32_t> labels;

  std::int32_t label(std::size_t row, std::size_t col) const { return labels[row * resolution + col]; }
  ChartPoint pixel_center(std::size_t row, std::size_t col) const;
  /// Pixel count per sample index.
  std::vector<std::size_t> label_areas(std::size_t sample_count) const;
  /// Sample indices whose cell covers at least theta * R^2 pixels.
  std::vector<std::size_t> full_dimensional_labels(std::size_t sample_count, double theta = 0.001) const;
  /// Chart points of every pixel carrying `label`.
  std::vector<Point3> cell_pixels(std::int32_t label) const;
};

/// Classifies every in-simplex pixel. Rows are split across `threads`
/// workers (0 = hardware concurrency); the result does not depend on the
/// thread count. Throws InvalidArgument for resolution < 16.
VoronoiRaster raster_voronoi(const CurveSample& sample, const PlanarNorm& norm, std::size_t resolution,
                             double tie_tolerance = kDefaultTieTolerance, unsigned threads = 0);

/// True iff every curve point within Euclidean chart distance r of x (x
/// itself excluded) lies strictly on one side of the line through x with
/// the given chart normal. The curve is probed at `sample_density`
/// uniformly spaced parameters.
bool half_ball_test(const Point3& x, const ChartPoint& normal, const ParametricCurve& curve, double r,
                    std::size_t sample_density);

/// Witness that the Voronoi cell of a sample point has dimension at least
/// face_dim + 1: the ball of radius epsilon around witness_y meets the
/// sample only at x, and x lies in the relative interior of a face of that
/// ball of dimension face_dim.
struct DimensionCertificate {
  std::size_t sample_index = 0;
  Point3 x{};
  Point3 witness_y{};
  double epsilon = 0.0;
  std::size_t edge = 0;  ///< edge of the unit ball whose translate contains x
  int face_dim = 1;
  int claimed_lower_bound = 2;
};

struct CertificateSearch {
  std::size_t search_budget = 40;
  /// Largest witness radius tried, in norm units.
  double initial_radius = 0.5;
  double shrink = 0.8;
  /// Smallest radius allowed, as a multiple of the sample's max step. Balls
  /// below a few sample spacings say nothing about the underlying curve.
  double min_radius_steps = 6.0;
  double tie_tolerance = kDefaultTieTolerance;
};

/// Searches for a facet certificate at sample point `index`: for each edge
/// of the unit ball, witnesses are placed at x - t * m (m the edge midpoint)
/// for geometrically decreasing t. Returns nullopt (NotFound) when the
/// budget is exhausted.
std::optional<DimensionCertificate> dimension_certificate(std::size_t index, const CurveSample& sample,
                                                          const PlanarNorm& norm,
                                                          const CertificateSearch& search = {});

/// Independent check of a certificate: gauge LP distances (not the facet
/// functionals used by the search) from witness_y to every other sample
/// exceed epsilon, and x is in the exact face cone at witness_y of the
/// certified edge.
bool verify_certificate(const DimensionCertificate& cert, const CurveSample& sample, const PlanarNorm& norm);

/// True iff every pixel lies in exactly one face cone of `ball` placed at x
/// (empty face, vertices and edges considered). Exact predicates.
bool face_cone_decomposition_check(const Point3& x, const std::vector<Point3>& cell_pixels, const PolyBall& ball);

/// Number of faces of `ball` (translated to x) whose cone contains y.
std::size_t face_cone_hits(const AffinePoint& x, const PolyBall& ball, const AffinePoint& y);

}  // namespace polyvor
