#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "fixtures.hpp"

using namespace polyvor;

namespace {

constexpr std::size_t kSamples = 1001;
constexpr std::size_t kResolution = 512;

std::vector<double> gauge_scan(const Point3& y, const CurveSample& sample, const FiniteMetric& d) {
  const auto gens = ball_generators(d);
  std::vector<double> out;
  for (const auto& p : sample.points) out.push_back(gauge_distance_float({p[0], p[1], p[2]}, {y[0], y[1], y[2]}, gens));
  return out;
}

bool in_simplex(const Point3& t) { return t[0] >= 0 && t[1] >= 0 && t[2] >= 0; }

Point3 random_simplex_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng), b = u(rng);
  if (a + b > 1) {
    a = 1 - a;
    b = 1 - b;
  }
  return {a, b, 1.0 - a - b};
}

// Predicted parameters matched one-to-one against above-threshold labels.
struct Agreement {
  std::vector<double> predicted;
  std::vector<double> observed;
  bool one_to_one = false;
};

Agreement compare(const FiniteMetric& d, const CurveSample& sample, std::size_t resolution) {
  Agreement a;
  for (const auto& p : testkit::distinct_tangency_parameters(hw_tangency_points(d))) a.predicted.push_back(to_double(p));
  const auto raster = raster_voronoi(sample, PlanarNorm::from_metric(d), resolution);
  for (std::size_t label : raster.full_dimensional_labels(sample.count())) a.observed.push_back(sample.params[label]);
  const double tol = 2.0 / static_cast<double>(sample.count() - 1);
  a.one_to_one = a.predicted.size() == a.observed.size();
  for (std::size_t i = 0; a.one_to_one && i < a.predicted.size(); ++i)
    a.one_to_one = std::abs(a.predicted[i] - a.observed[i]) <= tol;
  return a;
}

std::string describe(const Agreement& a) {
  std::string s = "predicted:";
  for (double p : a.predicted) s += " " + std::to_string(p);
  s += " observed:";
  for (double p : a.observed) s += " " + std::to_string(p);
  return s;
}

}  // namespace

TEST(SampleCurve, UniformParameters) {
  const auto s = sample_curve(hardy_weinberg_curve(), 3);
  EXPECT_EQ(s.params, (std::vector<double>{0.0, 0.5, 1.0}));
  const auto big = sample_curve(hardy_weinberg_curve(), kSamples);
  EXPECT_EQ(big.count(), kSamples);
  for (std::size_t i = 0; i < big.count(); ++i) {
    EXPECT_TRUE(in_simplex(big.points[i]));
    if (i) {
      EXPECT_LT(big.params[i - 1], big.params[i]);
    }
  }
  const auto circle = sample_curve(circle_curve({0.5, 0.3}, 0.1), 400);
  EXPECT_EQ(circle.points.front(), circle.points.back());
  EXPECT_THROW(sample_curve(hardy_weinberg_curve(), 1), Error);
}

TEST(PlanarNorm, MatchesGaugeLp) {
  std::mt19937_64 rng(41);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = random_metric(3, seed);
    const auto norm = PlanarNorm::from_metric(d);
    const auto gens = ball_generators(d);
    for (int i = 0; i < 20; ++i) {
      const Point3 x = random_simplex_point(rng), y = random_simplex_point(rng);
      EXPECT_NEAR(norm.distance(x, y), gauge_distance_float({x[0], x[1], x[2]}, {y[0], y[1], y[2]}, gens), 1e-12);
    }
  }
}

TEST(Classify, SamplePointGetsItsOwnLabel) {
  const auto s = sample_curve(hardy_weinberg_curve(), 101);
  for (std::size_t i = 0; i < s.count(); i += 7)
    EXPECT_EQ(classify(s.points[i], s, testkit::metric_d1()), static_cast<std::int32_t>(i));
}

TEST(Classify, SymmetricPointIsATie) {
  CurveSample s{{0.0, 1.0}, {{0.5, 0.25, 0.25}, {0.25, 0.5, 0.25}}};
  EXPECT_EQ(classify({0.375, 0.375, 0.25}, s, testkit::metric_d1()), kTieLabel);
  EXPECT_EQ(classify({0.45, 0.3, 0.25}, s, testkit::metric_d1()), 0);
}

TEST(Classify, AgreesWithExhaustiveGaugeScan) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  std::mt19937_64 rng(42);
  std::vector<Point3> queries{{0.6, 0.3, 0.1}};
  for (int i = 0; i < 150; ++i) queries.push_back(random_simplex_point(rng));
  for (const auto& d : {testkit::metric_d1(), testkit::metric_d2(), testkit::metric_d3()}) {
    for (const auto& y : queries) {
      const auto dist = gauge_scan(y, s, d);
      const auto best = std::min_element(dist.begin(), dist.end()) - dist.begin();
      const std::int32_t label = classify(y, s, d);
      if (label == kTieLabel) {
        auto sorted = dist;
        std::partial_sort(sorted.begin(), sorted.begin() + 2, sorted.end());
        EXPECT_LT(sorted[1] - sorted[0], 1e-8);
      } else {
        EXPECT_NEAR(dist[static_cast<std::size_t>(label)], dist[static_cast<std::size_t>(best)], 1e-9);
      }
    }
  }
}

TEST(Raster, SinglePointLabelsWholeSimplex) {
  const auto s = single_point_sample({0.2, 0.3, 0.5});
  const auto r = raster_voronoi(s, PlanarNorm::from_metric(testkit::metric_d3()), 64);
  for (std::size_t row = 0; row < 64; ++row) {
    for (std::size_t col = 0; col < 64; ++col) {
      const bool inside = in_simplex(from_plot_chart(r.pixel_center(row, col)));
      EXPECT_EQ(r.label(row, col), inside ? 0 : kOutsideLabel);
    }
  }
}

TEST(Raster, RejectsTinyResolution) {
  const auto s = single_point_sample({0.2, 0.3, 0.5});
  try {
    raster_voronoi(s, PlanarNorm::from_metric(testkit::metric_d1()), 15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Raster, IndependentOfThreadCount) {
  const auto s = sample_curve(hardy_weinberg_curve(), 201);
  const auto norm = PlanarNorm::from_metric(testkit::metric_d3());
  const auto reference = raster_voronoi(s, norm, 128, kDefaultTieTolerance, 1);
  for (unsigned threads : {2u, 3u, 7u, 0u}) EXPECT_EQ(raster_voronoi(s, norm, 128, kDefaultTieTolerance, threads).labels, reference.labels);
}

TEST(Raster, LabelsAreNearest) {
  const auto s = sample_curve(hardy_weinberg_curve(), 301);
  const auto d = testkit::metric_d2();
  const auto norm = PlanarNorm::from_metric(d);
  const auto r = raster_voronoi(s, norm, 96);
  for (std::size_t row = 0; row < 96; row += 5) {
    for (std::size_t col = 0; col < 96; col += 3) {
      const std::int32_t label = r.label(row, col);
      if (label < 0) continue;
      const Point3 y = from_plot_chart(r.pixel_center(row, col));
      const double own = norm.distance(s.points[static_cast<std::size_t>(label)], y);
      for (const auto& p : s.points) EXPECT_LE(own, norm.distance(p, y) + r.tie_tolerance);
    }
  }
}

TEST(Raster, HexagonalMetricHasOneCellAtOneHalf) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  const auto a = compare(testkit::metric_d1(), s, kResolution);
  EXPECT_TRUE(a.one_to_one) << describe(a);
}

TEST(Raster, ThirdExampleMetricHasThreeCells) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  const auto a = compare(testkit::metric_d3(), s, kResolution);
  EXPECT_TRUE(a.one_to_one) << describe(a);
}

// Area threshold 0.001 R^2 against the exact census, example metrics.
TEST(RasterCensusAgreement, ExampleMetrics) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  for (const auto& d : {testkit::metric_d1(), testkit::metric_d2(), testkit::metric_d3()}) {
    const auto a = compare(d, s, kResolution);
    EXPECT_TRUE(a.one_to_one) << describe(a);
  }
}

// Same check on 20 random metrics.
TEST(RasterCensusAgreement, RandomMetrics) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = compare(random_metric(3, seed), s, kResolution);
    EXPECT_TRUE(a.one_to_one) << "seed " << seed << " " << describe(a);
  }
}

TEST(Raster, NoSpuriousCells) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  const double spacing = 1.0 / static_cast<double>(kSamples - 1);
  std::vector<FiniteMetric> metrics{testkit::metric_d1(), testkit::metric_d2(), testkit::metric_d3()};
  for (std::uint64_t seed = 0; seed < 20; ++seed) metrics.push_back(random_metric(3, seed));
  for (const auto& d : metrics) {
    const auto a = compare(d, s, kResolution);
    for (double p : a.observed) {
      double nearest = 1.0;
      for (double q : a.predicted) nearest = std::min(nearest, std::abs(p - q));
      EXPECT_LE(nearest, 10 * spacing) << describe(a);
    }
  }
}

TEST(Raster, RefinementKeepsTheSameCells) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  for (const auto& d : {testkit::metric_d1(), testkit::metric_d2(), testkit::metric_d3()}) {
    const auto norm = PlanarNorm::from_metric(d);
    EXPECT_EQ(raster_voronoi(s, norm, kResolution).full_dimensional_labels(kSamples),
              raster_voronoi(s, norm, 2 * kResolution).full_dimensional_labels(kSamples));
  }
}

TEST(Raster, CircleCellsMatchFacetCount) {
  const auto circle = sample_curve(circle_curve({0.5, std::sqrt(3.0) / 6}, 0.15), kSamples);
  const auto hex = PlanarNorm::from_metric(testkit::metric_d1());
  const auto quad = PlanarNorm::from_metric(testkit::metric_line());
  EXPECT_EQ(raster_voronoi(circle, hex, kResolution).full_dimensional_labels(kSamples).size(), 6u);
  EXPECT_EQ(raster_voronoi(circle, quad, kResolution).full_dimensional_labels(kSamples).size(), 4u);
}

TEST(HalfBall, TangentAndTransversalLines) {
  const auto hw = hardy_weinberg_curve();
  const Point3 x = hw.eval(0.5);
  const auto tangent_edge = edge_directions(testkit::metric_d1())[2];
  EXPECT_TRUE(half_ball_test(x, chart_normal(tangent_edge), hw, 0.2, 2000));
  EXPECT_FALSE(half_ball_test(x, chart_normal(DirectionVector({1, -1, 0})), hw, 0.2, 2000));

  const auto circle = circle_curve({0.5, 0.3}, 0.1);
  EXPECT_TRUE(half_ball_test(circle.eval(0.25), {0.0, 1.0}, circle, 0.05, 2000));
  EXPECT_FALSE(half_ball_test(circle.eval(0.25), {1.0, 0.0}, circle, 0.05, 2000));
}

TEST(Certificate, FoundAtTangencyNotElsewhere) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  const auto norm = PlanarNorm::from_metric(testkit::metric_d1());
  const auto cert = dimension_certificate(500, s, norm);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->face_dim, 1);
  EXPECT_EQ(cert->claimed_lower_bound, 2);
  EXPECT_TRUE(verify_certificate(*cert, s, norm));
  EXPECT_FALSE(dimension_certificate(300, s, norm).has_value());
}

TEST(Certificate, SinglePointIsTrivial) {
  const auto s = single_point_sample({0.2, 0.3, 0.5});
  const auto norm = PlanarNorm::from_metric(testkit::metric_d2());
  const auto cert = dimension_certificate(0, s, norm);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->claimed_lower_bound, 2);
  EXPECT_TRUE(verify_certificate(*cert, s, norm));
}

TEST(Certificate, EveryCertificateVerifies) {
  const auto s = sample_curve(hardy_weinberg_curve(), 401);
  for (const auto& d : {testkit::metric_d1(), testkit::metric_d2(), testkit::metric_d3(), random_metric(3, 4)}) {
    const auto norm = PlanarNorm::from_metric(d);
    for (std::size_t i = 0; i < s.count(); ++i) {
      if (const auto cert = dimension_certificate(i, s, norm)) {
        EXPECT_TRUE(verify_certificate(*cert, s, norm)) << i;
      }
    }
  }
}

TEST(Certificate, TamperedWitnessFailsVerification) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  const auto norm = PlanarNorm::from_metric(testkit::metric_d1());
  auto cert = dimension_certificate(500, s, norm).value();
  cert.epsilon *= 3.0;
  EXPECT_FALSE(verify_certificate(cert, s, norm));
}

TEST(FaceConeDecomposition, RasterCellPixels) {
  const auto s = sample_curve(hardy_weinberg_curve(), kSamples);
  const auto norm = PlanarNorm::from_metric(testkit::metric_d1());
  const auto r = raster_voronoi(s, norm, 256);
  auto pixels = r.cell_pixels(500);
  std::mt19937_64 rng(43);
  std::shuffle(pixels.begin(), pixels.end(), rng);
  pixels.resize(std::min<std::size_t>(pixels.size(), 500));
  ASSERT_GE(pixels.size(), 100u);
  EXPECT_TRUE(face_cone_decomposition_check(s.points[500], pixels, norm.unit_ball()));
}

TEST(FaceConeDecomposition, PixelAtXAndVertexRays) {
  const auto norm = PlanarNorm::from_metric(testkit::metric_d1());
  const auto& ball = norm.unit_ball();
  const auto x = AffinePoint::simplex({Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  EXPECT_EQ(face_cone_hits(x, ball, x), 1u);
  EXPECT_TRUE(face_cone_membership(x, ball, ball_faces(ball)[0], x));
  std::vector<Point3> ray;
  for (const auto& v : ball.hull_vertices) {
    const auto y = x + Rational(1, 8) * (v - ball.center);
    EXPECT_EQ(face_cone_hits(x, ball, y), 1u);
    const auto faces = ball_faces(ball);
    for (const auto& f : faces)
      if (f.dim == 1) {
        EXPECT_FALSE(face_cone_membership(x, ball, f, y));
      }
    const auto yd = y.to_doubles();
    ray.push_back({yd[0], yd[1], yd[2]});
  }
  EXPECT_TRUE(face_cone_decomposition_check({0.25, 0.5, 0.25}, ray, ball));
}
