#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polyvor {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "0.25" into an exact
/// rational. Throws Error(ParseError) on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& value);

/// Parses a comma-separated list of rationals, e.g. "1/3,1/3,1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Exact rational value of a finite double.
Rational from_double(double value);

}  // namespace polyvor
