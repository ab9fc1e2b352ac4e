#include <catch2/catch_amalgamated.hpp>

#include "liecheck/polynomial.hpp"

using namespace liecheck;

TEST_CASE("characteristic polynomial of small matrices") {
  QMat d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  CHECK(char_poly(d) == Poly({Rational(2), Rational(-3), Rational(1)}));

  QMat rot{{0, -1}, {1, 0}};
  CHECK(char_poly(rot) == Poly({Rational(1), Rational(0), Rational(1)}));

  CHECK(char_poly(QMat(0, 0)) == Poly({Rational(1)}));
}

TEST_CASE("divide_linear is exact synthetic division") {
  // (x - 3)(x + 1) = x^2 - 2x - 3
  Poly p({Rational(-3), Rational(-2), Rational(1)});
  auto [q, rem] = p.divide_linear(Rational(3));
  CHECK(rem == 0);
  CHECK(q == Poly({Rational(1), Rational(1)}));
  CHECK(p.divide_linear(Rational(5)).second == p.eval(Rational(5)));
}

TEST_CASE("rational roots with multiplicity") {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  Poly p({Rational(2), Rational(-3), Rational(0), Rational(1)});
  auto rr = rational_roots(p);
  REQUIRE(rr.roots.size() == 2);
  CHECK(rr.remaining.degree() == 0);
  std::size_t total = 0;
  for (auto& [root, mult] : rr.roots) {
    total += mult;
    if (root == Rational(1)) CHECK(mult == 2);
    if (root == Rational(-2)) CHECK(mult == 1);
  }
  CHECK(total == 3);
}

TEST_CASE("fractional roots and zero roots") {
  // (2x - 1)(3x + 2) = 6x^2 + x - 2
  Poly p({Rational(-2), Rational(1), Rational(6)});
  auto rr = rational_roots(p);
  REQUIRE(rr.roots.size() == 2);
  bool half = false, minus_two_thirds = false;
  for (auto& [root, mult] : rr.roots) {
    if (root == Rational(1, 2)) half = (mult == 1);
    if (root == Rational(-2, 3)) minus_two_thirds = (mult == 1);
  }
  CHECK(half);
  CHECK(minus_two_thirds);

  // x^2 (x - 5)
  Poly z({Rational(0), Rational(0), Rational(-5), Rational(1)});
  auto zr = rational_roots(z);
  REQUIRE(zr.roots.size() == 2);
  CHECK(zr.roots[0] == std::pair{Rational(0), std::size_t{2}});
}

TEST_CASE("irrational and complex spectra leave a certificate factor") {
  Poly p({Rational(1), Rational(0), Rational(1)});  // x^2 + 1
  auto rr = rational_roots(p);
  CHECK(rr.roots.empty());
  CHECK(rr.remaining == p);

  // (x - 2)(x^2 - 2): only the rational root comes out
  Poly q = Poly({Rational(-2), Rational(1)}) * Poly({Rational(-2), Rational(0), Rational(1)});
  auto qr = rational_roots(q);
  REQUIRE(qr.roots.size() == 1);
  CHECK(qr.roots[0].first == Rational(2));
  CHECK(qr.remaining == Poly({Rational(-2), Rational(0), Rational(1)}));
}
