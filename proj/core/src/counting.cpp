#include "polyvor/counting.hpp"

#include "polyvor/error.hpp"

namespace polyvor {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::StrictCase1: return "strict_case_1";
    case Regime::StrictCase2: return "strict_case_2";
    case Regime::StrictCase3: return "strict_case_3";
    case Regime::Boundary: return "boundary";
  }
  return "unknown";
}

Regime classify_regime(const FiniteMetric& d) {
  if (d.n_states() != 3) throw Error(ErrorKind::DimensionMismatch, "census needs three states");
  const Rational& d12 = d.d(1, 2);
  const Rational& d13 = d.d(1, 3);
  const Rational& d23 = d.d(2, 3);
  if (d13 > d12 && d13 > d23) return Regime::StrictCase1;
  if ((d12 < d13 && d13 < d23) || (d23 < d13 && d13 < d12)) return Regime::StrictCase2;
  if (d13 < d12 && d13 < d23) return Regime::StrictCase3;
  return Regime::Boundary;
}

CellCensus count_full_dim_cells_hw(const FiniteMetric& d) {
  CellCensus census;
  census.regime = classify_regime(d);
  census.tangency = hw_tangency_points(d);
  census.count = static_cast<int>(census.tangency.entries.size());
  return census;
}

Rational full_dim_upper_bound(std::int64_t facet_count, std::int64_t dual_degree) {
  if (facet_count <= 0 || dual_degree <= 0) {
    throw Error(ErrorKind::InvalidArgument, "facet count and dual degree must be positive");
  }
  if (facet_count % 2 != 0) {
    throw Error(ErrorKind::OddFacetCount, "a centrally symmetric polytope has an even number of facets");
  }
  return Rational(facet_count) * Rational(dual_degree) / 2;
}

}  // namespace polyvor
