#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace polyvor;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("2/6"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational(" 0.25 "), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e5"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_string(Rational(4, 6)), "2/3");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
}

TEST(Rational, StringRoundTrip) {
  testkit::RationalRng rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational r(rng.integer(-1000, 1000), rng.integer(1, 999));
    r.canonicalize();
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(Rational, ListParsing) {
  const auto v = parse_rational_list("1/3, 1/3,1/3");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0] + v[1] + v[2], 1);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(from_double(0.5), Rational(1, 2));
  EXPECT_EQ(to_double(from_double(0.1)), 0.1);
}

TEST(MetricJson, ParsesIntegersAndFractionStrings) {
  const auto d = parse_metric_json(R"({"d": [[0, "1/2", 1], ["1/2", 0, 1], [1, 1, 0]]})");
  EXPECT_EQ(d.d(1, 2), Rational(1, 2));
  EXPECT_EQ(d.d(2, 3), 1);
}

TEST(MetricJson, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_metric(4, seed);
    EXPECT_EQ(parse_metric_json(metric_to_json(d)), d);
  }
}

TEST(MetricJson, ValidationErrorsPropagate) {
  try {
    parse_metric_json(R"({"d": [[0,1,3],[1,0,1],[3,1,0]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TriangleViolation);
  }
  for (const char* bad : {"{", R"({"x": 1})", R"({"d": [[0, 1.5], [1.5, 0]]})", R"({"d": [[0, "a"], ["a", 0]]})"}) {
    try {
      parse_metric_json(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(MetricJson, MissingFileIsIoError) {
  try {
    load_metric_file("/nonexistent/metric.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}
