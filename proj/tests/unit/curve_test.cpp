#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"

using namespace polyvor;

namespace {

std::vector<Rational> params_of(const TangencyReport& r) {
  std::vector<Rational> out;
  for (const auto& e : r.entries) out.push_back(e.p_star);
  return out;
}

std::vector<EdgeCase> cases_of(const TangencyReport& r) {
  std::vector<EdgeCase> out;
  for (const auto& e : r.entries) out.push_back(e.edge_case);
  return out;
}

void expect_tangent_matches_difference(const ParametricCurve& curve) {
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double p = 0.005 + 0.99 * i / 99.0;
    const Point3 t = curve.tangent(p);
    const Point3 a = curve.eval(p + h);
    const Point3 b = curve.eval(p - h);
    double err = 0.0, norm = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double fd = (a[k] - b[k]) / (2 * h);
      err = std::max(err, std::abs(fd - t[k]));
      norm = std::max(norm, std::abs(t[k]));
    }
    EXPECT_LE(err / norm, 1e-6) << curve.name << " p=" << p;
  }
}

}  // namespace

TEST(Veronese, ExamplePoints) {
  EXPECT_EQ(veronese_point(2, Rational(1, 2)), AffinePoint::simplex({Rational(1, 4), Rational(1, 2), Rational(1, 4)}));
  EXPECT_EQ(veronese_point(2, 0), AffinePoint::vertex(3, 2));
  EXPECT_EQ(veronese_point(3, Rational(1, 3)),
            AffinePoint::simplex({Rational(1, 27), Rational(2, 9), Rational(4, 9), Rational(8, 27)}));
}

TEST(Veronese, OutOfRange) {
  try {
    veronese_point(2, Rational(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParameterOutOfRange);
  }
  EXPECT_THROW(veronese_point(2, -1), Error);
}

TEST(HwTangent, Values) {
  EXPECT_EQ(hw_tangent(Rational(1, 2)), DirectionVector({1, 0, -1}));
  EXPECT_EQ(hw_tangent(0), DirectionVector({0, 2, -2}));
  EXPECT_EQ(hw_tangent(Rational(1, 3)), DirectionVector({Rational(2, 3), Rational(2, 3), Rational(-4, 3)}));
}

TEST(Curves, EvalSumsToOneAndTangentToZero) {
  for (const auto& curve : {hardy_weinberg_curve(), circle_curve({0.5, 0.3}, 0.1)}) {
    for (int i = 0; i <= 100; ++i) {
      const Point3 x = curve.eval(i / 100.0);
      const Point3 t = curve.tangent(i / 100.0);
      EXPECT_NEAR(x[0] + x[1] + x[2], 1.0, 1e-14);
      EXPECT_NEAR(t[0] + t[1] + t[2], 0.0, 1e-13);
    }
  }
}

TEST(Curves, TangentMatchesCentralDifference) {
  expect_tangent_matches_difference(hardy_weinberg_curve());
  expect_tangent_matches_difference(circle_curve({0.5, std::sqrt(3.0) / 6}, 0.15));
}

TEST(Curves, HardyWeinbergAgreesWithExactVeronese) {
  const auto hw = hardy_weinberg_curve();
  for (int k = 0; k <= 16; ++k) {
    const auto exact = veronese_point(2, Rational(k, 16)).to_doubles();
    const Point3 x = hw.eval(k / 16.0);
    for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(x[i], exact[i]);
  }
}

TEST(Curves, CircleIsClosed) {
  const auto c = circle_curve({0.5, 0.3}, 0.1);
  EXPECT_TRUE(c.closed);
  EXPECT_EQ(c.eval(0.0), c.eval(1.0));
  EXPECT_EQ(c.dual_degree, 2);
}

TEST(HwTangency, ExampleMetrics) {
  const auto r1 = hw_tangency_points(testkit::metric_d1());
  EXPECT_EQ(params_of(r1), (std::vector<Rational>{Rational(1, 2)}));
  EXPECT_EQ(cases_of(r1), (std::vector<EdgeCase>{EdgeCase::C}));
  EXPECT_EQ(r1.degenerate.size(), 2u);

  const auto r2 = hw_tangency_points(testkit::metric_d2());
  EXPECT_EQ(params_of(r2), (std::vector<Rational>{Rational(2, 3), Rational(4, 5)}));
  EXPECT_EQ(cases_of(r2), (std::vector<EdgeCase>{EdgeCase::C, EdgeCase::B}));

  const auto r3 = hw_tangency_points(testkit::metric_d3());
  EXPECT_EQ(params_of(r3), (std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(2, 3)}));
  EXPECT_EQ(cases_of(r3), (std::vector<EdgeCase>{EdgeCase::A, EdgeCase::C, EdgeCase::B}));
  EXPECT_TRUE(r3.degenerate.empty());
}

TEST(HwTangency, WrongSizeIsDimensionMismatch) {
  try {
    hw_tangency_points(random_metric(4, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(HwTangency, ExactParallelismSortingAndUniqueness) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto r = hw_tangency_points(random_metric(3, seed));
    std::vector<int> seen(3, 0);
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      const auto& e = r.entries[i];
      EXPECT_GT(e.p_star, 0);
      EXPECT_LT(e.p_star, 1);
      EXPECT_TRUE(parallel(hw_tangent(e.p_star), e.direction));
      EXPECT_EQ(++seen[static_cast<int>(e.edge_case)], 1);
      if (i > 0) {
        EXPECT_LE(r.entries[i - 1].p_star, e.p_star);
      }
    }
  }
}

TEST(HwTangency, AgreesWithNumericRootFinder) {
  const auto hw = hardy_weinberg_curve();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_metric(3, seed);
    const auto report = hw_tangency_points(d);
    const auto dirs = edge_directions(d);
    for (int c = 0; c < 3; ++c) {
      std::vector<double> exact;
      for (const auto& e : report.entries)
        if (static_cast<int>(e.edge_case) == c) exact.push_back(to_double(e.p_star));
      const auto numeric = planar_tangency_points(hw, dirs[c]);
      ASSERT_EQ(numeric.size(), exact.size()) << "seed " << seed << " case " << c;
      for (std::size_t i = 0; i < exact.size(); ++i) EXPECT_NEAR(numeric[i], exact[i], 1e-10);
    }
  }
}

TEST(HwTangency, SwappingFirstAndThirdStateMirrorsCases) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_metric(3, seed);
    const auto r = hw_tangency_points(d);
    const auto m = hw_tangency_points(permute_states(d, 0, 2));
    auto find = [](const TangencyReport& rep, EdgeCase c) -> std::optional<Rational> {
      for (const auto& e : rep.entries)
        if (e.edge_case == c) return e.p_star;
      return std::nullopt;
    };
    const auto a = find(r, EdgeCase::A);
    const auto b = find(m, EdgeCase::B);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(*b, 1 - *a);
    }
    const auto c1 = find(r, EdgeCase::C);
    const auto c2 = find(m, EdgeCase::C);
    EXPECT_EQ(*c2, 1 - *c1);
  }
}

TEST(PlanarTangency, ExampleCurves) {
  const auto roots = planar_tangency_points(hardy_weinberg_curve(), edge_directions(testkit::metric_d1())[2]);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0], 0.5, 1e-12);

  // Horizontal in the plotting chart is the direction e1 - e3.
  const auto circle = circle_curve({0.5, 0.3}, 0.1);
  const auto flat = planar_tangency_points(circle, DirectionVector({1, 0, -1}));
  ASSERT_EQ(flat.size(), 2u);
  EXPECT_NEAR(flat[0], 0.25, 1e-10);
  EXPECT_NEAR(flat[1], 0.75, 1e-10);

  ParametricCurve line{"line", [](double p) { return Point3{p, 0.0, 1.0 - p}; },
                       [](double) { return Point3{1.0, 0.0, -1.0}; }, std::nullopt, false};
  EXPECT_TRUE(planar_tangency_points(line, DirectionVector({1, -1, 0})).empty());
}

TEST(ChartNormal, IsUnitAndOrthogonal) {
  const DirectionVector v({1, -2, 1});
  const ChartPoint n = chart_normal(v);
  const ChartPoint t = to_plot_chart_direction({1, -2, 1});
  EXPECT_NEAR(std::hypot(n.x, n.y), 1.0, 1e-15);
  EXPECT_NEAR(n.x * t.x + n.y * t.y, 0.0, 1e-15);
}

TEST(Charts, PlotChartCorners) {
  const auto e3 = to_plot_chart({0, 0, 1});
  const auto e1 = to_plot_chart({1, 0, 0});
  const auto e2 = to_plot_chart({0, 1, 0});
  EXPECT_NEAR(e3.x, 0.0, 1e-15);
  EXPECT_NEAR(e1.x, 1.0, 1e-15);
  EXPECT_NEAR(e2.x, 0.5, 1e-15);
  EXPECT_NEAR(e2.y, std::sqrt(3.0) / 2, 1e-15);
  const Point3 back = from_plot_chart(to_plot_chart({0.2, 0.3, 0.5}));
  EXPECT_NEAR(back[1], 0.3, 1e-15);
  EXPECT_NEAR(back[0] + back[1] + back[2], 1.0, 1e-15);
}
