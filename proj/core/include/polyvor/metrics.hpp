#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "polyvor/rational.hpp"

namespace polyvor {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// A metric on the finite state set {1, ..., n+1}, stored as a symmetric
/// cost matrix with zero diagonal, positive off-diagonal entries and the
/// triangle inequality. Instances can only be obtained through
/// validate_metric (or helpers that call it), so every FiniteMetric in the
/// program satisfies those invariants.
class FiniteMetric {
 public:
  std::size_t n_states() const noexcept { return entries_.size(); }
  /// Ambient dimension n = n_states - 1.
  std::size_t dimension() const noexcept { return entries_.size() - 1; }

  /// Zero-based access.
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  /// One-based access matching the usual d_ij notation.
  const Rational& d(std::size_t i, std::size_t j) const { return entries_[i - 1][j - 1]; }

  const RationalMatrix& entries() const noexcept { return entries_; }

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  explicit FiniteMetric(RationalMatrix entries) : entries_(std::move(entries)) {}
  friend FiniteMetric validate_metric(const RationalMatrix& raw);

  RationalMatrix entries_;
};

/// Checks every metric axiom and returns the validated metric.
/// Throws Error with kind NotSquare, NotSymmetric, NonzeroDiagonal,
/// NonpositiveOffDiagonal or TriangleViolation; the indices carried by the
/// error are 1-based. TriangleViolation(i, j, k) means d_ij > d_ik + d_kj.
FiniteMetric validate_metric(const RationalMatrix& raw);

/// Convenience for literals in tests and fixtures.
FiniteMetric make_metric(const std::vector<std::vector<long>>& integer_entries);

/// Three-state metric from its upper-triangular entries d12, d13, d23.
FiniteMetric make_metric3(const Rational& d12, const Rational& d13, const Rational& d23);

/// Deterministic pseudo-random metric. Off-diagonal entries are drawn as
/// rationals k/64 * scale with k uniform in [1, 256] and the result is
/// closed under shortest paths, so the triangle inequality always holds.
FiniteMetric random_metric(std::size_t n_states, std::uint64_t seed, const Rational& scale = 1);

/// Copy of `metric` with states i and j (zero-based) exchanged.
FiniteMetric permute_states(const FiniteMetric& metric, std::size_t i, std::size_t j);

}  // namespace polyvor
