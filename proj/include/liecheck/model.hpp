#pragma once

#include <optional>
#include <string>

#include "liecheck/lie_algebra.hpp"

namespace liecheck {

/// A model as loaded from a file or built in: an algebra plus optional
/// subalgebra generators, complement vectors, and a candidate almost complex
/// structure on the complement.
struct Model {
  std::string name;
  LieAlgebra algebra;
  std::optional<QMat> subalgebra;  // rows: generators in algebra coordinates
  std::optional<QMat> complement;  // rows: complement basis in algebra coordinates
  std::optional<QMat> acs;         // endomorphism of the complement, column convention
};

// Basis indices of the built-in model, order (z, b, x1..x4, h, e, f).
namespace builtin {
constexpr std::size_t z = 0, b = 1, x1 = 2, x2 = 3, x3 = 4, x4 = 5, h = 6, e = 7, f = 8;
}

/// The built-in 9-dimensional model: sl(2) acting irreducibly on the 4-dim
/// graded part of a 6-dimensional solvable radical (a Heisenberg algebra
/// R z + V^4 extended by the grading derivation b). The distinguished
/// 3-dimensional solvable subalgebra is <x1, h-b, f-z>, the complement is
/// (z, b, e, x2, x3, x4), and the almost complex structure on it sends
/// z -> x2, b -> -x3, e -> x4.
inline Model builtin_model() {
  using namespace builtin;
  LieAlgebra g(9, {"z", "b", "x1", "x2", "x3", "x4", "h", "e", "f"});
  const Rational one(1), two(2), three(3);

  g.set_bracket(b, x1, {{x1, one}});
  g.set_bracket(b, x2, {{x2, one}});
  g.set_bracket(b, x3, {{x3, one}});
  g.set_bracket(b, x4, {{x4, one}});
  g.set_bracket(b, z, {{z, two}});
  g.set_bracket(h, x1, {{x1, -three}});
  g.set_bracket(h, x2, {{x2, -one}});
  g.set_bracket(h, x3, {{x3, one}});
  g.set_bracket(h, x4, {{x4, three}});
  g.set_bracket(f, x2, {{x1, -three}});
  g.set_bracket(f, x3, {{x2, -two}});
  g.set_bracket(f, x4, {{x3, -one}});
  g.set_bracket(e, x1, {{x2, one}});
  g.set_bracket(e, x2, {{x3, two}});
  g.set_bracket(e, x3, {{x4, three}});
  g.set_bracket(x1, x4, {{z, one}});
  g.set_bracket(x2, x3, {{z, -three}});
  g.set_bracket(h, f, {{f, -two}});
  g.set_bracket(h, e, {{e, two}});
  g.set_bracket(f, e, {{h, one}});

  Model m;
  m.name = "builtin";
  m.algebra = std::move(g);

  QMat sub(3, 9);
  sub(0, x1) = 1;                  // x1
  sub(1, h) = 1, sub(1, b) = -1;   // h - b
  sub(2, f) = 1, sub(2, z) = -1;   // f - z
  m.subalgebra = sub;

  QMat comp(6, 9);
  comp(0, z) = 1;
  comp(1, b) = 1;
  comp(2, e) = 1;
  comp(3, x2) = 1;
  comp(4, x3) = 1;
  comp(5, x4) = 1;
  m.complement = comp;

  // Complement coordinates (z, b, e, x2, x3, x4); J^2 = -id.
  QMat j(6, 6);
  j(3, 0) = 1;   // z  -> x2
  j(4, 1) = -1;  // b  -> -x3
  j(5, 2) = 1;   // e  -> x4
  j(0, 3) = -1;  // x2 -> -z
  j(1, 4) = 1;   // x3 -> b
  j(2, 5) = -1;  // x4 -> -e
  m.acs = j;
  return m;
}

/// Gram matrix, in the complement coordinates (z, b, e, x2, x3, x4), of the
/// expected invariant pseudo-Hermitian metric: the symmetrized products give
/// g(e,z) = g(x2,x4) = 1/2 and g(b,b) = g(x3,x3) = -1.
inline QMat builtin_metric_gram() {
  QMat g0(6, 6);
  g0(0, 2) = Rational(1, 2);
  g0(2, 0) = Rational(1, 2);
  g0(3, 5) = Rational(1, 2);
  g0(5, 3) = Rational(1, 2);
  g0(1, 1) = Rational(-1);
  g0(4, 4) = Rational(-1);
  return g0;
}

}  // namespace liecheck
