#include "polyvor/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "polyvor/error.hpp"
#include "polyvor/transport.hpp"

namespace polyvor {
namespace {

// Linear scan with the per-sample functional values precomputed:
// D(s, y) = max_k (l_k . y - l_k . s).
class Classifier {
 public:
  Classifier(const CurveSample& sample, const PlanarNorm& norm, double tie_tolerance)
      : functionals_(norm.functionals()), tie_tolerance_(tie_tolerance) {
    const std::size_t k = functionals_.size();
    values_.resize(sample.count() * k);
    canonical_.resize(sample.count());
    for (std::size_t s = 0; s < sample.count(); ++s) {
      const Point3& p = sample.points[s];
      for (std::size_t f = 0; f < k; ++f) {
        values_[s * k + f] = functionals_[f][0] * p[0] + functionals_[f][1] * p[1] + functionals_[f][2] * p[2];
      }
      canonical_[s] = s;
      for (std::size_t t = 0; t < s; ++t) {
        if (sample.points[t] == p) {
          canonical_[s] = canonical_[t];
          break;
        }
      }
    }
  }

  std::int32_t label(const Point3& y) const {
    const std::size_t k = functionals_.size();
    double at_y[16];
    for (std::size_t f = 0; f < k; ++f) {
      at_y[f] = functionals_[f][0] * y[0] + functionals_[f][1] * y[1] + functionals_[f][2] * y[2];
    }
    double best = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    std::size_t best_id = 0;
    bool have_best = false;
    const std::size_t n = canonical_.size();
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t id = canonical_[s];
      if (have_best && id == best_id) continue;
      const double* row = &values_[s * k];
      double dist = 0.0;
      for (std::size_t f = 0; f < k; ++f) dist = std::max(dist, at_y[f] - row[f]);
      if (dist < best) {
        second = best;
        best = dist;
        best_id = id;
        have_best = true;
      } else if (dist < second) {
        second = dist;
      }
    }
    if (!have_best) return kTieLabel;
    if (second - best < tie_tolerance_) return kTieLabel;
    return static_cast<std::int32_t>(best_id);
  }

 private:
  std::vector<Point3> functionals_;
  double tie_tolerance_;
  std::vector<double> values_;
  std::vector<std::size_t> canonical_;
};

bool in_simplex(const Point3& t) { return t[0] >= 0.0 && t[1] >= 0.0 && t[2] >= 0.0; }

}  // namespace

double CurveSample::max_step(const PlanarNorm& norm) const {
  double step = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) step = std::max(step, norm.distance(points[i - 1], points[i]));
  return step;
}

CurveSample sample_curve(const ParametricCurve& curve, std::size_t count) {
  if (count < 2) throw Error(ErrorKind::InvalidArgument, "need at least two samples");
  CurveSample sample;
  sample.params.reserve(count);
  sample.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double p = i + 1 == count ? 1.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    sample.params.push_back(p);
    sample.points.push_back(curve.eval(p));
  }
  return sample;
}

CurveSample single_point_sample(const Point3& point) { return CurveSample{{0.0}, {point}}; }

std::int32_t classify(const Point3& y, const CurveSample& sample, const PlanarNorm& norm, double tie_tolerance) {
  if (sample.count() == 0) throw Error(ErrorKind::InvalidArgument, "empty sample");
  if (norm.facet_count() > 16) throw Error(ErrorKind::TooLarge, "planar norms have at most 16 edges here");
  return Classifier(sample, norm, tie_tolerance).label(y);
}

std::int32_t classify(const Point3& y, const CurveSample& sample, const FiniteMetric& d, double tie_tolerance) {
  return classify(y, sample, PlanarNorm::from_metric(d), tie_tolerance);
}

ChartPoint VoronoiRaster::pixel_center(std::size_t row, std::size_t col) const {
  const double r = static_cast<double>(resolution);
  return {(static_cast<double>(col) + 0.5) / r, 1.0 - (static_cast<double>(row) + 0.5) / r};
}

std::vector<std::size_t> VoronoiRaster::label_areas(std::size_t sample_count) const {
  std::vector<std::size_t> areas(sample_count, 0);
  for (std::int32_t label : labels) {
    if (label >= 0 && static_cast<std::size_t>(label) < sample_count) ++areas[static_cast<std::size_t>(label)];
  }
  return areas;
}

std::vector<std::size_t> VoronoiRaster::full_dimensional_labels(std::size_t sample_count, double theta) const {
  const double threshold = theta * static_cast<double>(resolution) * static_cast<double>(resolution);
  const auto areas = label_areas(sample_count);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < areas.size(); ++s) {
    if (static_cast<double>(areas[s]) >= threshold) out.push_back(s);
  }
  return out;
}

std::vector<Point3> VoronoiRaster::cell_pixels(std::int32_t label) const {
  std::vector<Point3> out;
  for (std::size_t row = 0; row < resolution; ++row) {
    for (std::size_t col = 0; col < resolution; ++col) {
      if (this->label(row, col) == label) out.push_back(from_plot_chart(pixel_center(row, col)));
    }
  }
  return out;
}

VoronoiRaster raster_voronoi(const CurveSample& sample, const PlanarNorm& norm, std::size_t resolution,
                             double tie_tolerance, unsigned threads) {
  if (resolution < 16) throw Error(ErrorKind::InvalidArgument, "resolution must be at least 16");
  if (sample.count() == 0) throw Error(ErrorKind::InvalidArgument, "empty sample");
  if (norm.facet_count() > 16) throw Error(ErrorKind::TooLarge, "planar norms have at most 16 edges here");
  VoronoiRaster raster;
  raster.resolution = resolution;
  raster.tie_tolerance = tie_tolerance;
  raster.labels.assign(resolution * resolution, kOutsideLabel);
  const Classifier classifier(sample, norm, tie_tolerance);

  const auto work_rows = [&](std::size_t first, std::size_t last) {
    for (std::size_t row = first; row < last; ++row) {
      for (std::size_t col = 0; col < resolution; ++col) {
        const Point3 t = from_plot_chart(raster.pixel_center(row, col));
        if (in_simplex(t)) raster.labels[row * resolution + col] = classifier.label(t);
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, resolution));
  if (threads <= 1) {
    work_rows(0, resolution);
    return raster;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (resolution + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t first = w * chunk;
    const std::size_t last = std::min(resolution, first + chunk);
    if (first >= last) break;
    workers.emplace_back(work_rows, first, last);
  }
  for (auto& worker : workers) worker.join();
  return raster;
}

bool half_ball_test(const Point3& x, const ChartPoint& normal, const ParametricCurve& curve, double r,
                    std::size_t sample_density) {
  if (r <= 0.0) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
  if (sample_density < 2) throw Error(ErrorKind::InvalidArgument, "sample density must be at least 2");
  const ChartPoint cx = to_plot_chart(x);
  int side = 0;
  for (std::size_t i = 0; i < sample_density; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(sample_density - 1);
    const ChartPoint c = to_plot_chart(curve.eval(p));
    const double dx = c.x - cx.x;
    const double dy = c.y - cx.y;
    const double dist = std::hypot(dx, dy);
    if (dist < 1e-12 || dist > r) continue;
    const double s = normal.x * dx + normal.y * dy;
    if (s == 0.0) return false;
    const int sign = s > 0.0 ? 1 : -1;
    if (side == 0) {
      side = sign;
    } else if (sign != side) {
      return false;
    }
  }
  return true;
}

std::optional<DimensionCertificate> dimension_certificate(std::size_t index, const CurveSample& sample,
                                                          const PlanarNorm& norm, const CertificateSearch& search) {
  if (index >= sample.count()) throw Error(ErrorKind::InvalidArgument, "sample index out of range");
  const Point3& x = sample.points[index];
  const double min_radius = search.min_radius_steps * sample.max_step(norm);
  double t = search.initial_radius;
  for (std::size_t trial = 0; trial < search.search_budget && t >= min_radius; ++trial, t *= search.shrink) {
    for (std::size_t k = 0; k < norm.facet_count(); ++k) {
      const Point3 m = norm.edge_midpoint(k);
      const Point3 y{x[0] - t * m[0], x[1] - t * m[1], x[2] - t * m[2]};
      bool touches_only_x = true;
      for (std::size_t s = 0; s < sample.count() && touches_only_x; ++s) {
        if (s == index || sample.points[s] == x) continue;
        touches_only_x = norm.distance(y, sample.points[s]) > t + search.tie_tolerance;
      }
      if (touches_only_x) return DimensionCertificate{index, x, y, t, k, 1, 2};
    }
  }
  return std::nullopt;
}

bool verify_certificate(const DimensionCertificate& cert, const CurveSample& sample, const PlanarNorm& norm) {
  if (cert.claimed_lower_bound != cert.face_dim + 1) return false;
  const auto& generators = norm.unit_ball().generators;
  const std::vector<double> y(cert.witness_y.begin(), cert.witness_y.end());
  for (std::size_t s = 0; s < sample.count(); ++s) {
    if (s == cert.sample_index || sample.points[s] == cert.x) continue;
    const std::vector<double> p(sample.points[s].begin(), sample.points[s].end());
    if (!(gauge_distance_float(y, p, generators) > cert.epsilon)) return false;
  }
  // x must sit in the relative interior of the certified edge of the ball
  // around y, i.e. inside the cone C_{-F}(y) over that edge.
  const PolyBall& ball = norm.unit_ball();
  const auto faces = ball_faces(ball);
  const std::size_t edge_face = 1 + ball.hull_vertices.size() + cert.edge;
  const AffinePoint y_exact = AffinePoint::from_doubles(y);
  const AffinePoint x_exact = AffinePoint::from_doubles({cert.x[0], cert.x[1], cert.x[2]});
  if (!face_cone_membership(y_exact, ball, faces[faces[edge_face].opposite], x_exact)) return false;
  return face_cone_hits(y_exact, ball, x_exact) == 1;
}

std::size_t face_cone_hits(const AffinePoint& x, const PolyBall& ball, const AffinePoint& y) {
  std::size_t hits = 0;
  for (const auto& face : ball_faces(ball)) {
    if (face_cone_membership(x, ball, face, y)) ++hits;
  }
  return hits;
}

bool face_cone_decomposition_check(const Point3& x, const std::vector<Point3>& cell_pixels, const PolyBall& ball) {
  const AffinePoint apex = AffinePoint::from_doubles({x[0], x[1], x[2]});
  for (const auto& pixel : cell_pixels) {
    const AffinePoint y = AffinePoint::from_doubles({pixel[0], pixel[1], pixel[2]});
    if (face_cone_hits(apex, ball, y) != 1) return false;
  }
  return true;
}

}  // namespace polyvor
