#include "polyvor/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyvor/ball.hpp"
#include "polyvor/error.hpp"

namespace polyvor {
namespace {

double chart_cross(const Point3& tangent, const ChartPoint& dir) {
  const ChartPoint t = to_plot_chart_direction(tangent);
  return t.x * dir.y - t.y * dir.x;
}

}  // namespace

ParametricCurve hardy_weinberg_curve() {
  ParametricCurve curve;
  curve.name = "hw";
  curve.eval = [](double p) {
    const double q = 1.0 - p;
    return Point3{p * p, 2.0 * p * q, q * q};
  };
  curve.tangent = [](double p) { return Point3{2.0 * p, 2.0 - 4.0 * p, 2.0 * p - 2.0}; };
  curve.dual_degree = 2;
  return curve;
}

ParametricCurve circle_curve(const ChartPoint& center, double radius) {
  ParametricCurve curve;
  curve.name = "circle";
  curve.eval = [center, radius](double p) {
    // fmod makes p = 1 land exactly on p = 0.
    const double angle = 2.0 * std::numbers::pi * std::fmod(p, 1.0);
    return from_plot_chart({center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
  };
  curve.tangent = [radius](double p) {
    const double angle = 2.0 * std::numbers::pi * p;
    const double speed = 2.0 * std::numbers::pi * radius;
    return from_plot_chart_direction({-speed * std::sin(angle), speed * std::cos(angle)});
  };
  curve.dual_degree = 2;
  curve.closed = true;
  return curve;
}

AffinePoint veronese_point(std::size_t n, const Rational& p) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Veronese degree must be at least 1");
  if (p < 0 || p > 1) throw Error(ErrorKind::ParameterOutOfRange, "parameter must lie in [0, 1]");
  const Rational q = 1 - p;
  std::vector<Rational> coords;
  coords.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    Rational term(binom);
    for (std::size_t e = 0; e < n - k; ++e) term *= p;
    for (std::size_t e = 0; e < k; ++e) term *= q;
    coords.push_back(term);
  }
  return AffinePoint::simplex(std::move(coords));
}

DirectionVector hw_tangent(const Rational& p) { return DirectionVector({2 * p, 2 - 4 * p, 2 * p - 2}); }

std::string_view to_string(EdgeCase c) {
  switch (c) {
    case EdgeCase::A: return "a";
    case EdgeCase::B: return "b";
    case EdgeCase::C: return "c";
  }
  return "?";
}

TangencyReport hw_tangency_points(const FiniteMetric& d) {
  if (d.n_states() != 3) throw Error(ErrorKind::DimensionMismatch, "Hardy-Weinberg tangency needs three states");
  const Rational& d12 = d.d(1, 2);
  const Rational& d13 = d.d(1, 3);
  const Rational& d23 = d.d(2, 3);
  const auto directions = edge_directions(d);
  TangencyReport report;

  if (d12 > d13) {
    report.entries.push_back({(d12 - d13) / (2 * d12 - d13), EdgeCase::A, directions[0]});
  } else if (d12 == d13) {
    report.degenerate.push_back({EdgeCase::A, "d12 = d13", Rational(0)});
  }
  // Mirror image of (a) under swapping the first and third states.
  if (d23 > d13) {
    report.entries.push_back({1 - (d23 - d13) / (2 * d23 - d13), EdgeCase::B, directions[1]});
  } else if (d23 == d13) {
    report.degenerate.push_back({EdgeCase::B, "d23 = d13", Rational(1)});
  }
  report.entries.push_back({d23 / (d12 + d23), EdgeCase::C, directions[2]});

  std::sort(report.entries.begin(), report.entries.end(),
            [](const TangencyEntry& a, const TangencyEntry& b) { return a.p_star < b.p_star; });
  return report;
}

std::vector<double> planar_tangency_points(const ParametricCurve& curve, const DirectionVector& direction,
                                           std::size_t bracket_count) {
  if (direction.size() != 3) throw Error(ErrorKind::DimensionMismatch, "planar tangency needs three states");
  if (direction.is_zero()) throw Error(ErrorKind::InvalidArgument, "direction must be nonzero");
  if (bracket_count < 1) throw Error(ErrorKind::InvalidArgument, "bracket_count must be positive");
  const auto dv = direction.to_doubles();
  const ChartPoint dir = to_plot_chart_direction({dv[0], dv[1], dv[2]});
  const auto f = [&](double p) { return chart_cross(curve.tangent(p), dir); };

  std::vector<double> roots;
  const double h = 1.0 / static_cast<double>(bracket_count);
  double lo = 0.0;
  double f_lo = f(lo);
  for (std::size_t k = 1; k <= bracket_count; ++k) {
    const double hi = k == bracket_count ? 1.0 : static_cast<double>(k) * h;
    const double f_hi = f(hi);
    if (f_hi == 0.0) {
      if (k < bracket_count) roots.push_back(hi);
    } else if (f_lo != 0.0 && std::signbit(f_lo) != std::signbit(f_hi)) {
      double a = lo;
      double b = hi;
      double fa = f_lo;
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    f_lo = f_hi;
  }
  return roots;
}

ChartPoint chart_normal(const DirectionVector& direction) {
  const auto dv = direction.to_doubles();
  const ChartPoint t = to_plot_chart_direction({dv[0], dv[1], dv[2]});
  const double len = std::hypot(t.x, t.y);
  if (len == 0.0) throw Error(ErrorKind::InvalidArgument, "direction must be nonzero");
  return {-t.y / len, t.x / len};
}

}  // namespace polyvor
