#include "polyvor/rational.hpp"

#include <cctype>
#include <cmath>

#include "polyvor/error.hpp"

namespace polyvor {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
    const mpz_class den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !is_integer_literal(int_part)) ||
        (!frac_part.empty() && !is_integer_literal(frac_part)) ||
        (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+'))) {
      throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(s) + "'");
    }
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    const mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
    const mpz_class frac = frac_part.empty() ? mpz_class(0) : mpz_class(std::string(frac_part), 10);
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& input) {
  Rational value = input;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::InvalidArgument, "non-finite coordinate");
  return Rational(value);
}

}  // namespace polyvor
