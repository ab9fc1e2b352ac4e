#pragma once

#include <string>

#include "liecheck/rational.hpp"

namespace liecheck {

/// Element of Q(i): a rational with a rational multiple of i adjoined.
/// Forms a field; conjugation is the unique nontrivial automorphism.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from the base field
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(int n) : re(n) {}  // NOLINT

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }
  /// re^2 + im^2 = z * conj(z); zero only for z = 0.
  Rational norm2() const { return re * re + im * im; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.norm2();
    if (n == 0) throw Error("division by zero Gaussian rational");
    Gaussian c = a * b.conj();
    return {c.re / n, c.im / n};
  }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// "a", "bi", or "a+bi" / "a-bi" with exact rational parts.
inline std::string to_string(const Gaussian& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im = to_string(z.im) + "i";
  if (z.re == 0) return im;
  return z.im < 0 ? to_string(z.re) + im : to_string(z.re) + "+" + im;
}

}  // namespace liecheck
