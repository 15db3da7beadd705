#pragma once

#include <cstdint>
#include <string_view>

#include "polyvor/curve.hpp"
#include "polyvor/metrics.hpp"

namespace polyvor {

enum class Regime {
  StrictCase1,  ///< d13 > max(d12, d23): one cell
  StrictCase2,  ///< d13 strictly between d12 and d23: two cells
  StrictCase3,  ///< d13 < min(d12, d23): three cells
  Boundary,     ///< some equality among d13 and d12 or d23 holds
};

std::string_view to_string(Regime r);

struct CellCensus {
  int count = 0;
  Regime regime = Regime::Boundary;
  TangencyReport tangency;
};

/// Number of full-dimensional Wasserstein-Voronoi cells of the
/// Hardy-Weinberg curve: 1 + [d12 > d13] + [d23 > d13]. This is the number
/// of tangency entries; on the strict regimes it matches the 1/2/3 table.
CellCensus count_full_dim_cells_hw(const FiniteMetric& d);

/// Regime of the (d12, d13, d23) triple without computing tangencies.
Regime classify_regime(const FiniteMetric& d);

/// Upper bound facet_count * dual_degree / 2 on the number of
/// full-dimensional cells. Throws OddFacetCount for odd facet counts and
/// InvalidArgument for non-positive inputs.
Rational full_dim_upper_bound(std::int64_t facet_count, std::int64_t dual_degree);

}  // namespace polyvor
