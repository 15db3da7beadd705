#include "polyvor/transport.hpp"

#include <cmath>
#include <functional>

#include "polyvor/detail/transportation_simplex.hpp"
#include "polyvor/error.hpp"

namespace polyvor {
namespace {

void check_inputs(const AffinePoint& mu, const AffinePoint& nu, const FiniteMetric& d) {
  if (mu.size() != d.n_states() || nu.size() != d.n_states()) {
    throw Error(ErrorKind::DimensionMismatch, "distributions and metric have different sizes");
  }
  if (!mu.in_simplex() || !nu.in_simplex()) {
    throw Error(ErrorKind::NotInSimplex, "transport needs nonnegative marginals");
  }
}

// Flow on a spanning tree of the bipartite graph is determined by the
// marginals; peel leaves until the tree is exhausted.
std::optional<RationalMatrix> tree_flow(const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                        std::vector<Rational> supply, std::vector<Rational> demand) {
  const std::size_t m = supply.size();
  RationalMatrix flow(m, std::vector<Rational>(m, Rational(0)));
  std::vector<bool> used(cells.size(), false);
  std::vector<int> row_degree(m, 0);
  std::vector<int> col_degree(m, 0);
  for (const auto& [i, j] : cells) {
    ++row_degree[i];
    ++col_degree[j];
  }
  for (std::size_t step = 0; step < cells.size(); ++step) {
    bool progressed = false;
    for (std::size_t k = 0; k < cells.size() && !progressed; ++k) {
      if (used[k]) continue;
      const auto [i, j] = cells[k];
      Rational value;
      if (row_degree[i] == 1) {
        value = supply[i];
      } else if (col_degree[j] == 1) {
        value = demand[j];
      } else {
        continue;
      }
      flow[i][j] = value;
      supply[i] -= value;
      demand[j] -= value;
      --row_degree[i];
      --col_degree[j];
      used[k] = true;
      progressed = true;
    }
    if (!progressed) return std::nullopt;  // contains a cycle
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (supply[i] != 0 || demand[i] != 0) return std::nullopt;
  }
  return flow;
}

}  // namespace

bool TransportPlan::feasible() const {
  const std::size_t m = flow.size();
  if (source.size() != m || target.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational row = 0;
    Rational col = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (flow[i][j] < 0) return false;
      row += flow[i][j];
      col += flow[j][i];
    }
    if (row != source[i] || col != target[i]) return false;
  }
  return true;
}

Rational TransportPlan::cost(const FiniteMetric& d) const {
  Rational total = 0;
  for (std::size_t i = 0; i < flow.size(); ++i) {
    for (std::size_t j = 0; j < flow.size(); ++j) total += d(i, j) * flow[i][j];
  }
  return total;
}

TransportResult wasserstein_distance(const AffinePoint& mu, const AffinePoint& nu, const FiniteMetric& d) {
  check_inputs(mu, nu, d);
  detail::TransportationSimplex<Rational> solver(mu.coords(), nu.coords(), d.entries());
  auto result = solver.solve();
  return {result.cost, TransportPlan{std::move(result.flow), mu, nu}};
}

FloatTransportResult wasserstein_distance_float(const std::vector<double>& mu, const std::vector<double>& nu,
                                                const FiniteMetric& d) {
  const std::size_t m = d.n_states();
  if (mu.size() != m || nu.size() != m) {
    throw Error(ErrorKind::DimensionMismatch, "distributions and metric have different sizes");
  }
  double mu_sum = 0.0;
  double nu_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (mu[i] < -1e-12 || nu[i] < -1e-12) throw Error(ErrorKind::NotInSimplex, "negative marginal");
    mu_sum += mu[i];
    nu_sum += nu[i];
  }
  if (std::abs(mu_sum - 1.0) > 1e-9 || std::abs(nu_sum - 1.0) > 1e-9) {
    throw Error(ErrorKind::NotInSimplex, "marginals do not sum to one");
  }
  std::vector<std::vector<double>> cost(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) cost[i][j] = d(i, j).get_d();
  }
  detail::TransportationSimplex<double> solver(mu, nu, cost);
  auto result = solver.solve();
  return {result.cost, std::move(result.flow)};
}

Rational brute_force_distance(const AffinePoint& mu, const AffinePoint& nu, const FiniteMetric& d) {
  check_inputs(mu, nu, d);
  if (d.dimension() > 4) throw Error(ErrorKind::TooLarge, "brute force is limited to n <= 4");
  const std::size_t m = d.n_states();
  const std::size_t basis_size = 2 * m - 1;
  std::vector<std::pair<std::size_t, std::size_t>> all_cells;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) all_cells.emplace_back(i, j);
  }
  std::optional<Rational> best;
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (chosen.size() == basis_size) {
      if (auto flow = tree_flow(chosen, mu.coords(), nu.coords())) {
        Rational total = 0;
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            if ((*flow)[i][j] < 0) return;
            total += d(i, j) * (*flow)[i][j];
          }
        }
        if (!best || total < *best) best = total;
      }
      return;
    }
    for (std::size_t k = start; k + (basis_size - chosen.size()) <= all_cells.size(); ++k) {
      chosen.push_back(all_cells[k]);
      choose(k + 1);
      chosen.pop_back();
    }
  };
  choose(0);
  if (!best) throw Error(ErrorKind::Infeasible, "no basic feasible solution found");
  return *best;
}

}  // namespace polyvor
