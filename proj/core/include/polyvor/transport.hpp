#pragma once

#include <cstddef>
#include <vector>

#include "polyvor/affine.hpp"
#include "polyvor/metrics.hpp"

namespace polyvor {

/// A coupling of `source` and `target`: nonnegative flow whose row sums are
/// the source marginals and column sums are the target marginals.
struct TransportPlan {
  RationalMatrix flow;
  AffinePoint source;
  AffinePoint target;

  /// True iff the flow is nonnegative and reproduces both marginals exactly.
  bool feasible() const;
  Rational cost(const FiniteMetric& d) const;
};

struct TransportResult {
  Rational cost;
  TransportPlan plan;
};

struct FloatTransportResult {
  double cost = 0.0;
  std::vector<std::vector<double>> flow;
};

/// Exact Wasserstein distance W_d(mu, nu) by network simplex on the
/// transportation instance. Throws DimensionMismatch if the sizes disagree
/// with the metric and NotInSimplex for points outside the simplex.
TransportResult wasserstein_distance(const AffinePoint& mu, const AffinePoint& nu, const FiniteMetric& d);

/// Floating-point network simplex (feasibility tolerance 1e-12, optimality
/// tolerance 1e-9). Inputs must be nonnegative and sum to one up to 1e-9.
FloatTransportResult wasserstein_distance_float(const std::vector<double>& mu, const std::vector<double>& nu,
                                                const FiniteMetric& d);

/// Exhaustive oracle: enumerates every spanning-tree basis of the
/// transportation polytope and keeps the cheapest feasible one. Only meant
/// for cross-checking; throws TooLarge when n > 4.
Rational brute_force_distance(const AffinePoint& mu, const AffinePoint& nu, const FiniteMetric& d);

// ---------------------------------------------------------------------------
// Polyhedral gauge

/// Smallest r with y - x in r * conv(generators), via the LP
///   min sum(lambda)  s.t.  sum(lambda_k g_k) = y - x,  lambda >= 0.
/// Accepts any points of the hyperplane sum(t) = 1, including ones with
/// negative coordinates. Throws Infeasible if the generators do not reach
/// y - x.
Rational gauge_distance(const AffinePoint& x, const AffinePoint& y, const std::vector<DirectionVector>& generators);

/// Floating-point version of gauge_distance for points given as doubles.
double gauge_distance_float(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<DirectionVector>& generators);

}  // namespace polyvor
