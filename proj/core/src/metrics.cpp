#include "polyvor/metrics.hpp"

#include <random>
#include <string>

#include "polyvor/error.hpp"

namespace polyvor {
namespace {

std::string index_pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

FiniteMetric validate_metric(const RationalMatrix& input) {
  RationalMatrix raw = input;
  for (auto& row : raw) {
    for (auto& v : row) v.canonicalize();
  }
  const std::size_t m = raw.size();
  if (m < 2) throw Error(ErrorKind::NotSquare, "metric needs at least two states");
  for (const auto& row : raw) {
    if (row.size() != m) throw Error(ErrorKind::NotSquare, "cost matrix is not square");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (raw[i][i] != 0) {
      throw Error(ErrorKind::NonzeroDiagonal, "d" + index_pair(i, i) + " must be 0",
                  {static_cast<int>(i + 1)});
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (raw[i][j] != raw[j][i]) {
        throw Error(ErrorKind::NotSymmetric, "d" + index_pair(i, j) + " != d" + index_pair(j, i),
                    {static_cast<int>(i + 1), static_cast<int>(j + 1)});
      }
      if (raw[i][j] <= 0) {
        throw Error(ErrorKind::NonpositiveOffDiagonal, "d" + index_pair(i, j) + " must be positive",
                    {static_cast<int>(i + 1), static_cast<int>(j + 1)});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (raw[i][j] > raw[i][k] + raw[k][j]) {
          throw Error(ErrorKind::TriangleViolation,
                      "d" + index_pair(i, j) + " exceeds d" + index_pair(i, k) + " + d" +
                          index_pair(k, j),
                      {static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1)});
        }
      }
    }
  }
  return FiniteMetric(raw);
}

FiniteMetric make_metric(const std::vector<std::vector<long>>& integer_entries) {
  RationalMatrix raw;
  raw.reserve(integer_entries.size());
  for (const auto& row : integer_entries) {
    auto& out = raw.emplace_back();
    for (long v : row) out.emplace_back(v);
  }
  return validate_metric(raw);
}

FiniteMetric make_metric3(const Rational& d12, const Rational& d13, const Rational& d23) {
  return validate_metric({{0, d12, d13}, {d12, 0, d23}, {d13, d23, 0}});
}

FiniteMetric random_metric(std::size_t n_states, std::uint64_t seed, const Rational& scale) {
  if (n_states < 2) throw Error(ErrorKind::InvalidArgument, "random_metric needs n_states >= 2");
  if (scale <= 0) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(1, 256);
  RationalMatrix d(n_states, std::vector<Rational>(n_states, Rational(0)));
  for (std::size_t i = 0; i < n_states; ++i) {
    for (std::size_t j = i + 1; j < n_states; ++j) {
      Rational v(numerator(rng), 64);
      v.canonicalize();
      v *= scale;
      d[i][j] = v;
      d[j][i] = v;
    }
  }
  // Shortest-path closure repairs any triangle violation.
  for (std::size_t k = 0; k < n_states; ++k) {
    for (std::size_t i = 0; i < n_states; ++i) {
      for (std::size_t j = 0; j < n_states; ++j) {
        const Rational via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return validate_metric(d);
}

FiniteMetric permute_states(const FiniteMetric& metric, std::size_t i, std::size_t j) {
  const std::size_t m = metric.n_states();
  auto swap_index = [&](std::size_t k) { return k == i ? j : (k == j ? i : k); };
  RationalMatrix raw(m, std::vector<Rational>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) raw[a][b] = metric(swap_index(a), swap_index(b));
  }
  return validate_metric(raw);
}

}  // namespace polyvor
