#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "liecheck/matrix.hpp"
#include "liecheck/rational.hpp"

namespace liecheck {

/// Univariate polynomial over Q, coefficients by ascending power.
struct Poly {
  VecQ c;  // c[i] is the coefficient of x^i; no trailing zeros

  Poly() = default;
  explicit Poly(VecQ coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

  Rational eval(const Rational& x) const {
    Rational v(0);
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    VecQ p(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) p[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(p));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    VecQ p(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) p[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) p[i] -= b.c[i];
    return Poly(std::move(p));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  /// Exact division by (x - r); the remainder (= eval at r) is returned too.
  std::pair<Poly, Rational> divide_linear(const Rational& r) const {
    if (is_zero()) return {Poly{}, Rational(0)};
    VecQ q(c.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * r;
      q[i - 1] = carry;
    }
    Rational rem = c[0] + carry * r;
    return {Poly(std::move(q)), rem};
  }
};

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.
inline Poly char_poly(const QMat& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("char_poly of non-square matrix");
  const std::size_t n = a.rows();
  VecQ c(n + 1, Rational(0));
  c[n] = 1;
  QMat m = QMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Rational ck = -m.trace() / Rational(static_cast<int>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return Poly(std::move(c));
}

struct RationalRoots {
  std::vector<std::pair<Rational, std::size_t>> roots;  // (root, multiplicity)
  Poly remaining;  // root-free factor; constant iff the polynomial splits over Q
};

namespace detail {
inline std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> divs;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  return divs;
}
}  // namespace detail

/// Extracts all rational roots with multiplicity (rational root theorem on the
/// denominator-cleared coefficients, then repeated exact division).
inline RationalRoots rational_roots(Poly p) {
  RationalRoots out;
  if (p.is_zero() || p.degree() == 0) {
    out.remaining = std::move(p);
    return out;
  }

  std::size_t zero_mult = 0;
  while (!p.is_zero() && p.c[0] == 0) {
    p = p.divide_linear(Rational(0)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);

  while (p.degree() >= 1) {
    Int l = 1;
    for (const auto& q : p.c) l = boost::multiprecision::lcm(l, den(q));
    Int a0 = num(p.c.front() * Rational(l));
    Int an = num(p.c.back() * Rational(l));

    bool found = false;
    for (const Int& pn : detail::positive_divisors(a0)) {
      for (const Int& qd : detail::positive_divisors(an)) {
        for (int sign : {1, -1}) {
          Rational r(sign * pn, qd);
          if (p.eval(r) != 0) continue;
          std::size_t mult = 0;
          while (p.degree() >= 1 && p.eval(r) == 0) {
            p = p.divide_linear(r).first;
            ++mult;
          }
          out.roots.emplace_back(r, mult);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  out.remaining = std::move(p);
  return out;
}

}  // namespace liecheck
