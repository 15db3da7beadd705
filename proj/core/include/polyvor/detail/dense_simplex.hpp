#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyvor/detail/numeric_traits.hpp"

namespace polyvor::detail {

/// Two-phase tableau simplex for  min c.x  s.t.  A x = b, x >= 0.
/// Bland's rule on both entering and leaving variables. Returns nullopt when
/// the system is infeasible. The problems solved here are tiny (a handful of
/// rows), so a dense tableau is adequate.
template <class T>
class DenseSimplex {
 public:
  using Matrix = std::vector<std::vector<T>>;

  struct Solution {
    T objective;
    std::vector<T> x;
  };

  static std::optional<Solution> minimize(Matrix a, std::vector<T> b, const std::vector<T>& c) {
    const std::size_t rows = a.size();
    const std::size_t cols = c.size();
    for (std::size_t r = 0; r < rows; ++r) {
      if (b[r] < T(0)) {
        b[r] = -b[r];
        for (auto& v : a[r]) v = -v;
      }
    }
    // Tableau columns: original variables, then one artificial per row, then rhs.
    const std::size_t width = cols + rows + 1;
    Matrix tab(rows, std::vector<T>(width, T(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t k = 0; k < cols; ++k) tab[r][k] = a[r][k];
      tab[r][cols + r] = T(1);
      tab[r][width - 1] = b[r];
      basis[r] = cols + r;
    }

    // Phase 1: minimize the sum of artificials.
    std::vector<T> phase1(width - 1, T(0));
    for (std::size_t r = 0; r < rows; ++r) phase1[cols + r] = T(1);
    run(tab, basis, phase1, width - 1);
    T infeasibility(0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (basis[r] >= cols) infeasibility += tab[r][width - 1];
    }
    if (Tolerance<T>::positive(infeasibility)) return std::nullopt;

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < tab.size();) {
      if (basis[r] < cols) {
        ++r;
        continue;
      }
      std::optional<std::size_t> pivot_col;
      for (std::size_t k = 0; k < cols; ++k) {
        if (!Tolerance<T>::is_zero(tab[r][k])) {
          pivot_col = k;
          break;
        }
      }
      if (pivot_col) {
        pivot(tab, basis, r, *pivot_col);
        ++r;
      } else {
        tab.erase(tab.begin() + static_cast<std::ptrdiff_t>(r));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }

    // Phase 2 over the original columns only.
    std::vector<T> phase2(width - 1, T(0));
    for (std::size_t k = 0; k < cols; ++k) phase2[k] = c[k];
    run(tab, basis, phase2, cols);

    Solution sol{T(0), std::vector<T>(cols, T(0))};
    for (std::size_t r = 0; r < tab.size(); ++r) {
      if (basis[r] < cols) sol.x[basis[r]] = tab[r][width - 1];
    }
    for (std::size_t k = 0; k < cols; ++k) sol.objective += c[k] * sol.x[k];
    return sol;
  }

 private:
  static void pivot(Matrix& tab, std::vector<std::size_t>& basis, std::size_t row, std::size_t col) {
    const T scale = tab[row][col];
    for (auto& v : tab[row]) v /= scale;
    for (std::size_t r = 0; r < tab.size(); ++r) {
      if (r == row) continue;
      const T factor = tab[r][col];
      if (Tolerance<T>::is_zero(factor)) continue;
      for (std::size_t k = 0; k < tab[r].size(); ++k) tab[r][k] -= factor * tab[row][k];
    }
    basis[row] = col;
  }

  // Simplex iterations restricted to entering columns [0, allowed).
  static void run(Matrix& tab, std::vector<std::size_t>& basis, const std::vector<T>& cost,
                  std::size_t allowed) {
    const std::size_t rhs = tab.empty() ? 0 : tab[0].size() - 1;
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t k = 0; k < allowed && !entering; ++k) {
        bool is_basic = false;
        for (std::size_t b : basis) is_basic = is_basic || b == k;
        if (is_basic) continue;
        T reduced = cost[k];
        for (std::size_t r = 0; r < tab.size(); ++r) reduced -= cost[basis[r]] * tab[r][k];
        if (Tolerance<T>::negative_reduced_cost(reduced)) entering = k;
      }
      if (!entering) return;
      std::optional<std::size_t> leaving;
      T best_ratio(0);
      for (std::size_t r = 0; r < tab.size(); ++r) {
        if (!Tolerance<T>::positive(tab[r][*entering])) continue;
        const T ratio = tab[r][rhs] / tab[r][*entering];
        if (!leaving) {
          leaving = r;
          best_ratio = ratio;
        } else if (!Tolerance<T>::equal(ratio, best_ratio) && ratio < best_ratio) {
          leaving = r;
          best_ratio = ratio;
        } else if (Tolerance<T>::equal(ratio, best_ratio) && basis[r] < basis[*leaving]) {
          leaving = r;
          if (ratio < best_ratio) best_ratio = ratio;
        }
      }
      // Unbounded cannot happen for the gauge problems (objective >= 0).
      if (!leaving) return;
      pivot(tab, basis, *leaving, *entering);
    }
  }
};

}  // namespace polyvor::detail
