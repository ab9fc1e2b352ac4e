#pragma once

// Small fixed algebras and a seeded generator of (algebra, subalgebra) pairs
// shared across the test suites. Every generated case is a genuine Lie
// algebra: a catalogued one in disguise under a random unimodular change of
// basis, so Jacobi holds by construction.

#include <string>
#include <vector>

#include "liecheck/lie_algebra.hpp"
#include "liecheck/model.hpp"
#include "liecheck/rng.hpp"

namespace zoo {

using namespace liecheck;

// Basis (h, e, f), brackets [h,e] = 2e, [h,f] = -2f, [f,e] = h.
inline LieAlgebra sl2() {
  LieAlgebra l(3, {"h", "e", "f"});
  l.set_bracket(0, 1, {{1, Rational(2)}});
  l.set_bracket(0, 2, {{2, Rational(-2)}});
  l.set_bracket(2, 1, {{0, Rational(1)}});
  return l;
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

// Basis (z, p1..pk, q1..qk) with [p_i, q_i] = z.
inline LieAlgebra heisenberg(std::size_t k) {
  LieAlgebra l(2 * k + 1);
  for (std::size_t i = 0; i < k; ++i) l.set_bracket(1 + i, 1 + k + i, {{0, Rational(1)}});
  return l;
}

// [e0,e1] = e2, [e0,e2] = -e1: ad(e0) has no rational eigenvalues on <e1,e2>.
inline LieAlgebra rotation3() {
  LieAlgebra l(3);
  l.set_bracket(0, 1, {{2, Rational(1)}});
  l.set_bracket(0, 2, {{1, Rational(-1)}});
  return l;
}

// [e0,e1] = e1.
inline LieAlgebra affine2() {
  LieAlgebra l(2);
  l.set_bracket(0, 1, {{1, Rational(1)}});
  return l;
}

// The 6-dimensional solvable radical of the built-in model, standalone:
// basis (z, b, x1..x4), [b,z] = 2z, [b,xi] = xi, [x1,x4] = z, [x2,x3] = -3z.
inline LieAlgebra radical6() {
  LieAlgebra l(6, {"z", "b", "x1", "x2", "x3", "x4"});
  l.set_bracket(1, 0, {{0, Rational(2)}});
  for (std::size_t i = 2; i <= 5; ++i) l.set_bracket(1, i, {{i, Rational(1)}});
  l.set_bracket(2, 5, {{0, Rational(1)}});
  l.set_bracket(3, 4, {{0, Rational(-3)}});
  return l;
}

// sl(2) action on radical6 matching the built-in model: irreducible on
// x1..x4, trivial on z and b. Order (h, e, f).
inline std::vector<QMat> sl2_action_on_radical6() {
  QMat ah(6, 6), ae(6, 6), af(6, 6);
  ah(2, 2) = -3, ah(3, 3) = -1, ah(4, 4) = 1, ah(5, 5) = 3;
  ae(3, 2) = 1, ae(4, 3) = 2, ae(5, 4) = 3;
  af(2, 3) = -3, af(3, 4) = -2, af(4, 5) = -1;
  return {ah, ae, af};
}

// 2-dimensional irreducible sl(2) module in the (h, e, f) convention above.
inline std::vector<QMat> sl2_action_v1() {
  QMat ah(2, 2), ae(2, 2), af(2, 2);
  ah(0, 0) = 1, ah(1, 1) = -1;
  ae(0, 1) = 1;
  af(1, 0) = -1;
  return {ah, ae, af};
}

struct AlgebraWithSubalgebra {
  std::string name;
  LieAlgebra g;
  QMat h_gens;  // rows, in g coordinates
};

inline QMat rows_from_indices(std::size_t dim, std::initializer_list<std::size_t> idx) {
  QMat m(0, dim);
  for (std::size_t i : idx) {
    VecQ v(dim, Rational(0));
    v[i] = 1;
    m.append_row(v);
  }
  return m;
}

inline std::vector<AlgebraWithSubalgebra> catalogue() {
  std::vector<AlgebraWithSubalgebra> out;
  out.push_back({"sl2/borel", sl2(), rows_from_indices(3, {0, 1})});
  out.push_back({"sl2/cartan", sl2(), rows_from_indices(3, {0})});
  out.push_back({"heis5/center+p", heisenberg(2), rows_from_indices(5, {0, 1})});
  out.push_back({"heis3/center", heisenberg(1), rows_from_indices(3, {0})});
  out.push_back({"radical6/grading", radical6(), rows_from_indices(6, {1})});
  out.push_back({"radical6/abelian", radical6(), rows_from_indices(6, {0, 2})});
  out.push_back({"abelian4/plane", abelian(4), rows_from_indices(4, {0, 1})});
  out.push_back({"rotation3/axis", rotation3(), rows_from_indices(3, {0})});
  out.push_back({"affine2/diagonal", affine2(), rows_from_indices(2, {0})});
  {
    LieAlgebra g5 = semidirect_product(sl2(), abelian(2), sl2_action_v1());
    out.push_back({"sl2xV1/borel", std::move(g5), rows_from_indices(5, {0, 1})});
  }
  return out;
}

/// A catalogued case conjugated by a random unimodular change of basis.
/// The subalgebra generators are transported along.
inline AlgebraWithSubalgebra random_case(Rng& rng) {
  auto all = catalogue();
  auto base = all[static_cast<std::size_t>(rng.next() % all.size())];
  const std::size_t n = base.g.dim;
  QMat p = rng.unimodular(n);
  LieAlgebra g2 = change_basis(base.g, p);
  QMat pinv_t = inverse(p)->transpose();
  QMat gens2(0, n);
  for (std::size_t r = 0; r < base.h_gens.rows(); ++r)
    gens2.append_row(pinv_t.apply(base.h_gens.row(r)));
  return {base.name + "+conj", std::move(g2), std::move(gens2)};
}

/// Completes h to a basis of g greedily with standard basis vectors, then
/// mixes a random h-component into each complement vector so complements are
/// not aligned with the coordinate axes.
inline QMat random_complement(const LieAlgebra& g, const QMat& h_gens, Rng& rng) {
  const std::size_t n = g.dim;
  QMat picked = h_gens;
  QMat complement(0, n);
  for (std::size_t i = 0; i < n && picked.rows() < n; ++i) {
    VecQ v(n, Rational(0));
    v[i] = 1;
    QMat trial = picked;
    trial.append_row(v);
    if (rank_of(trial) == trial.rows()) {
      picked = trial;
      complement.append_row(v);
    }
  }
  for (std::size_t r = 0; r < complement.rows(); ++r)
    for (std::size_t k = 0; k < h_gens.rows(); ++k) {
      Rational f(rng.range(-2, 2));
      if (f == 0) continue;
      complement.set_row(r, vec_add(complement.row(r), vec_scale(f, h_gens.row(k))));
    }
  return complement;
}

}  // namespace zoo
