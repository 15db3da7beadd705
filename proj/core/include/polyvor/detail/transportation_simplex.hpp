#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

#include "polyvor/detail/numeric_traits.hpp"

namespace polyvor::detail {

/// Primal network simplex on the complete bipartite transportation graph
/// (rows = sources, columns = sinks). The basis is a spanning tree with
/// exactly 2m - 1 cells, degenerate cells included. Entering and leaving
/// cells are chosen by Bland's rule (smallest row-major index), which rules
/// out cycling on degenerate pivots.
template <class T>
class TransportationSimplex {
 public:
  using Matrix = std::vector<std::vector<T>>;

  struct Result {
    T cost;
    Matrix flow;
    std::size_t pivots = 0;
  };

  TransportationSimplex(const std::vector<T>& supply, const std::vector<T>& demand, const Matrix& cost)
      : m_(supply.size()), cost_(cost), flow_(m_, std::vector<T>(m_, T(0))),
        basic_(m_, std::vector<bool>(m_, false)) {
    north_west_corner(supply, demand);
  }

  Result solve() {
    std::size_t pivots = 0;
    while (true) {
      compute_potentials();
      const auto entering = find_entering();
      if (!entering) break;
      pivot(entering->first, entering->second);
      ++pivots;
    }
    T total(0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (Tolerance<T>::is_zero(flow_[i][j])) flow_[i][j] = T(0);
        total += cost_[i][j] * flow_[i][j];
      }
    }
    return {total, flow_, pivots};
  }

 private:
  using Cell = std::pair<std::size_t, std::size_t>;

  void north_west_corner(std::vector<T> supply, std::vector<T> demand) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < m_ && j < m_) {
      const T q = supply[i] < demand[j] ? supply[i] : demand[j];
      flow_[i][j] = q;
      basic_[i][j] = true;
      supply[i] -= q;
      demand[j] -= q;
      if (i == m_ - 1 && j == m_ - 1) break;
      if (i == m_ - 1) {
        ++j;
      } else if (j == m_ - 1) {
        ++i;
      } else if (Tolerance<T>::is_zero(supply[i])) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  // Nodes 0..m-1 are rows, m..2m-1 are columns. Potentials satisfy
  // u_i + v_j = c_ij on every basic cell, with u_0 = 0.
  void compute_potentials() {
    u_.assign(m_, T(0));
    v_.assign(m_, T(0));
    std::vector<bool> seen(2 * m_, false);
    std::queue<std::size_t> queue;
    seen[0] = true;
    queue.push(0);
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop();
      if (node < m_) {
        for (std::size_t j = 0; j < m_; ++j) {
          if (basic_[node][j] && !seen[m_ + j]) {
            v_[j] = cost_[node][j] - u_[node];
            seen[m_ + j] = true;
            queue.push(m_ + j);
          }
        }
      } else {
        const std::size_t j = node - m_;
        for (std::size_t i = 0; i < m_; ++i) {
          if (basic_[i][j] && !seen[i]) {
            u_[i] = cost_[i][j] - v_[j];
            seen[i] = true;
            queue.push(i);
          }
        }
      }
    }
  }

  std::optional<Cell> find_entering() const {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (basic_[i][j]) continue;
        const T reduced = cost_[i][j] - u_[i] - v_[j];
        if (Tolerance<T>::negative_reduced_cost(reduced)) return Cell{i, j};
      }
    }
    return std::nullopt;
  }

  // Tree path from column node of `j` to row node of `i`, as a list of cells.
  std::vector<Cell> tree_path(std::size_t row, std::size_t col) const {
    const std::size_t start = m_ + col;
    const std::size_t goal = row;
    std::vector<std::size_t> parent(2 * m_, 2 * m_);
    std::queue<std::size_t> queue;
    parent[start] = start;
    queue.push(start);
    while (!queue.empty() && parent[goal] == 2 * m_) {
      const std::size_t node = queue.front();
      queue.pop();
      for (std::size_t other = 0; other < m_; ++other) {
        const std::size_t next = node < m_ ? m_ + other : other;
        const bool edge = node < m_ ? basic_[node][other] : basic_[other][node - m_];
        if (edge && parent[next] == 2 * m_) {
          parent[next] = node;
          queue.push(next);
        }
      }
    }
    std::vector<Cell> cells;
    for (std::size_t node = goal; node != start; node = parent[node]) {
      const std::size_t prev = parent[node];
      cells.push_back(node < m_ ? Cell{node, prev - m_} : Cell{prev, node - m_});
    }
    // Cells are listed from the row end; reverse so the first cell touches column `col`.
    return {cells.rbegin(), cells.rend()};
  }

  std::size_t index(const Cell& c) const { return c.first * m_ + c.second; }

  void pivot(std::size_t row, std::size_t col) {
    // Cycle: entering (row,col) gets +theta; the path from col back to row
    // alternates -theta, +theta, ...
    const std::vector<Cell> path = tree_path(row, col);
    std::optional<Cell> leaving;
    T theta(0);
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const T& f = flow_[path[k].first][path[k].second];
      if (!leaving) {
        leaving = path[k];
        theta = f;
      } else if (!Tolerance<T>::equal(f, theta) && f < theta) {
        leaving = path[k];
        theta = f;
      } else if (Tolerance<T>::equal(f, theta) && index(path[k]) < index(*leaving)) {
        leaving = path[k];
        if (f < theta) theta = f;
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      const auto [i, j] = path[k];
      if (k % 2 == 0) {
        flow_[i][j] -= theta;
      } else {
        flow_[i][j] += theta;
      }
    }
    flow_[row][col] += theta;
    basic_[row][col] = true;
    basic_[leaving->first][leaving->second] = false;
    flow_[leaving->first][leaving->second] = T(0);
  }

  std::size_t m_;
  Matrix cost_;
  Matrix flow_;
  std::vector<std::vector<bool>> basic_;
  std::vector<T> u_;
  std::vector<T> v_;
};

}  // namespace polyvor::detail
