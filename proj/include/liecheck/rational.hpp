#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "liecheck/errors.hpp"

namespace liecheck {

// All arithmetic in this library is exact. Scalars are arbitrary-precision
// rationals, always kept in lowest terms with a positive denominator
// (cpp_rational canonicalizes on every operation).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p" or "p/q" with optional sign; anything else is rejected.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw InvalidInput("malformed rational: '" + std::string(text) + "'"); };
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) fail();
  text = text.substr(begin, end - begin + 1);

  auto parse_int = [&](std::string_view s) -> Int {
    if (s.empty()) fail();
    bool negative = s[0] == '-';
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) fail();
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') fail();
    Int v(std::string(s.substr(i)));
    return negative ? Int(-v) : v;
  };

  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int p = parse_int(text.substr(0, slash));
  Int q = parse_int(text.substr(slash + 1));
  if (q == 0) fail();
  return Rational(p, q);
}

/// Exact square root, when the argument is a perfect square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Int n = num(q), d = den(q);
  Int rn = boost::multiprecision::sqrt(n);
  Int rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace liecheck
