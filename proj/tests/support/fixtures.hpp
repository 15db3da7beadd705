#pragma once

#include <polyvor/polyvor.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace polyvor::testkit {

// Metrics of the worked examples.
inline FiniteMetric metric_d1() { return make_metric({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}); }
inline FiniteMetric metric_line() { return make_metric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}); }
inline FiniteMetric metric_d2() { return make_metric({{0, 2, 3}, {2, 0, 4}, {3, 4, 0}}); }
inline FiniteMetric metric_d3() { return make_metric({{0, 2, 1}, {2, 0, 2}, {1, 2, 0}}); }

inline AffinePoint barycenter3() { return AffinePoint::barycenter(3); }

class RationalRng {
 public:
  explicit RationalRng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  /// Point of the simplex with coordinates w_i / sum(w), w_i in [0, denom].
  AffinePoint simplex_point(std::size_t size, long denom = 12) {
    std::vector<long> w(size);
    long total = 0;
    while (total == 0) {
      total = 0;
      for (auto& wi : w) total += (wi = integer(0, denom));
    }
    std::vector<Rational> coords;
    for (long wi : w) coords.emplace_back(wi, total);
    for (auto& c : coords) c.canonicalize();
    return AffinePoint::simplex(coords);
  }

  /// Point of the plane sum(t) = 1 with possibly negative coordinates.
  AffinePoint plane_point(std::size_t size, long span = 40, long denom = 16) {
    std::vector<Rational> coords;
    Rational rest = 1;
    for (std::size_t i = 0; i + 1 < size; ++i) {
      Rational c(integer(-span, span), denom);
      c.canonicalize();
      rest -= c;
      coords.push_back(c);
    }
    coords.push_back(rest);
    return AffinePoint::hyperplane(coords);
  }

  Rational positive(long max_numer = 64, long denom = 16) {
    Rational r(integer(1, max_numer), denom);
    r.canonicalize();
    return r;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Three-state metric drawn by rejection until classify_regime returns
/// `wanted`. Entries are k/16 with k in [1, 64].
inline FiniteMetric metric_in_regime(Regime wanted, RationalRng& rng) {
  for (;;) {
    const Rational a = rng.positive(), b = rng.positive(), c = rng.positive();
    if (a > b + c || b > a + c || c > a + b) continue;
    FiniteMetric d = make_metric3(a, b, c);
    if (classify_regime(d) == wanted) return d;
  }
}

inline std::vector<Rational> distinct_tangency_parameters(const TangencyReport& report) {
  std::vector<Rational> out;
  for (const auto& e : report.entries) {
    if (out.empty() || out.back() != e.p_star) out.push_back(e.p_star);
  }
  return out;
}

}  // namespace polyvor::testkit
