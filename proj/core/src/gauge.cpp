#include <cmath>

#include "polyvor/detail/dense_simplex.hpp"
#include "polyvor/error.hpp"
#include "polyvor/transport.hpp"

namespace polyvor {
namespace {

template <class T>
T solve_gauge(const std::vector<T>& w, const std::vector<std::vector<T>>& generators) {
  const std::size_t size = w.size();
  // The last coordinate is implied by the zero-sum constraint.
  const std::size_t rows = size - 1;
  std::vector<std::vector<T>> a(rows, std::vector<T>(generators.size(), T(0)));
  std::vector<T> b(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    b[r] = w[r];
    for (std::size_t k = 0; k < generators.size(); ++k) a[r][k] = generators[k][r];
  }
  const std::vector<T> ones(generators.size(), T(1));
  const auto sol = detail::DenseSimplex<T>::minimize(std::move(a), std::move(b), ones);
  if (!sol) throw Error(ErrorKind::Infeasible, "generators do not span the difference vector");
  return sol->objective;
}

void check_generators(std::size_t size, const std::vector<DirectionVector>& generators) {
  if (generators.empty()) throw Error(ErrorKind::Infeasible, "no generators");
  for (const auto& g : generators) {
    if (g.size() != size) throw Error(ErrorKind::DimensionMismatch, "generator size mismatch");
  }
}

}  // namespace

Rational gauge_distance(const AffinePoint& x, const AffinePoint& y, const std::vector<DirectionVector>& generators) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "points have different sizes");
  check_generators(x.size(), generators);
  const DirectionVector w = y - x;
  if (w.is_zero()) return 0;
  std::vector<std::vector<Rational>> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.coords());
  return solve_gauge<Rational>(w.coords(), gens);
}

double gauge_distance_float(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<DirectionVector>& generators) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "points have different sizes");
  check_generators(x.size(), generators);
  std::vector<double> w(x.size());
  bool zero = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    w[i] = y[i] - x[i];
    zero = zero && w[i] == 0.0;
  }
  if (zero) return 0.0;
  std::vector<std::vector<double>> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.to_doubles());
  return solve_gauge<double>(w, gens);
}

}  // namespace polyvor
