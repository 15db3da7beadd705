#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace polyvor;

TEST(Census, ExampleMetrics) {
  const auto c1 = count_full_dim_cells_hw(testkit::metric_d1());
  EXPECT_EQ(c1.count, 1);
  EXPECT_EQ(c1.regime, Regime::Boundary);
  const auto c2 = count_full_dim_cells_hw(testkit::metric_d2());
  EXPECT_EQ(c2.count, 2);
  EXPECT_EQ(c2.regime, Regime::StrictCase2);
  const auto c3 = count_full_dim_cells_hw(testkit::metric_d3());
  EXPECT_EQ(c3.count, 3);
  EXPECT_EQ(c3.regime, Regime::StrictCase3);
}

TEST(Census, RegimeNames) {
  EXPECT_EQ(to_string(Regime::StrictCase1), "strict_case_1");
  EXPECT_EQ(to_string(Regime::Boundary), "boundary");
}

TEST(Census, TableOnStrictRegimes) {
  testkit::RationalRng rng(31);
  const std::pair<Regime, int> table[] = {{Regime::StrictCase1, 1}, {Regime::StrictCase2, 2}, {Regime::StrictCase3, 3}};
  for (const auto& [regime, expected] : table) {
    for (int i = 0; i < 200; ++i) {
      const auto census = count_full_dim_cells_hw(testkit::metric_in_regime(regime, rng));
      EXPECT_EQ(census.count, expected);
      EXPECT_EQ(census.regime, regime);
    }
  }
}

TEST(Census, FormulaAndTangencyCountAgree) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto d = random_metric(3, seed);
    const auto census = count_full_dim_cells_hw(d);
    const int formula = 1 + (d.d(1, 2) > d.d(1, 3)) + (d.d(2, 3) > d.d(1, 3));
    EXPECT_EQ(census.count, formula);
    EXPECT_EQ(census.count, static_cast<int>(census.tangency.entries.size()));
    EXPECT_GE(census.count, 1);
    EXPECT_LE(census.count, 3);
  }
}

TEST(Census, BoundRespected) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto d = random_metric(3, seed);
    const auto facets = static_cast<std::int64_t>(build_ball(testkit::barycenter3(), 1, d).facet_count());
    EXPECT_LE(count_full_dim_cells_hw(d).count, full_dim_upper_bound(facets, 2));
  }
}

TEST(Bound, Values) {
  EXPECT_EQ(full_dim_upper_bound(6, 2), 6);
  EXPECT_EQ(full_dim_upper_bound(4, 2), 4);
  EXPECT_EQ(full_dim_upper_bound(2, 7), 7);
  EXPECT_EQ(full_dim_upper_bound(2, 1), 1);
}

TEST(Bound, Errors) {
  try {
    full_dim_upper_bound(5, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddFacetCount);
  }
  EXPECT_THROW(full_dim_upper_bound(0, 2), Error);
  EXPECT_THROW(full_dim_upper_bound(4, 0), Error);
}

TEST(Bound, WassersteinSpecialization) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::int64_t deg = 1; deg <= 4; ++deg) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
      Rational expected(binom * deg);
      expected /= 2;
      EXPECT_EQ(full_dim_upper_bound(static_cast<std::int64_t>(facet_count_bound(n)), deg), expected);
    }
  }
}
