#include <catch2/catch_amalgamated.hpp>

#include "liecheck/homogeneous.hpp"
#include "liecheck/model.hpp"
#include "liecheck/rng.hpp"
#include "support/algebra_zoo.hpp"

using namespace liecheck;

namespace {

HomogeneousSplit builtin_split() {
  Model m = builtin_model();
  return make_split(m.algebra, *m.subalgebra, *m.complement);
}

// z, b, e, x2, x3, x4 inside the complement.
constexpr std::size_t mz = 0, mb = 1, me = 2, mx2 = 3, mx3 = 4, mx4 = 5;

}  // namespace

TEST_CASE("make_split projects brackets onto the two factors") {
  HomogeneousSplit s = builtin_split();
  CHECK(s.dim_h() == 3);
  CHECK(s.dim_m() == 6);

  // rho(f-z) e = b with phi(f-z, e) = h-b, since [f,e] = h = (h-b) + b.
  VecQ rho_col = s.isotropy.rho[2].col(me);
  VecQ expect_m(6, Rational(0));
  expect_m[mb] = 1;
  CHECK(rho_col == expect_m);
  VecQ phi_col = s.phi[2].col(me);
  CHECK(phi_col == VecQ{Rational(0), Rational(1), Rational(0)});

  // theta picks up both components of [m, m]: [e, x2] = 2 x3 is pure m,
  // [e, x3] = 3 x4 pure m, [x2, x3] = -3z pure m.
  VecQ th = s.theta_m.row(pair_index(6, me, mx2));
  VecQ expect(6, Rational(0));
  expect[mx3] = 2;
  CHECK(th == expect);
  CHECK(vec_is_zero(s.theta_h.row(pair_index(6, me, mx2))));

  // [x2, x4] = 0 in g: both components vanish.
  CHECK(vec_is_zero(s.theta_m.row(pair_index(6, mx2, mx4))));
  CHECK(vec_is_zero(s.theta_h.row(pair_index(6, mx2, mx4))));
}

TEST_CASE("a split with trivial subalgebra keeps the whole bracket in theta") {
  LieAlgebra g = zoo::heisenberg(2);
  HomogeneousSplit s = make_split(g, QMat(0, 5), QMat::identity(5));
  CHECK(s.dim_h() == 0);
  CHECK(s.isotropy.rho.empty());
  for (const auto& [i, j] : pair_list(5)) {
    CHECK(s.theta_m.row(pair_index(5, i, j)) ==
          g.bracket(g.basis_vector(i), g.basis_vector(j)));
  }
}

TEST_CASE("non-complementary choices are rejected") {
  Model m = builtin_model();
  QMat bad = *m.complement;
  bad.set_row(0, m.subalgebra->row(0));  // now dependent with h
  CHECK_THROWS_AS(make_split(m.algebra, *m.subalgebra, bad), NotComplement);
  CHECK_THROWS_AS(make_split(m.algebra, *m.subalgebra, QMat(5, 9)), NotComplement);
}

TEST_CASE("invariant endomorphisms of the built-in split") {
  HomogeneousSplit s = builtin_split();
  Subspace e = invariant_endomorphisms(s);
  CHECK(e.dim() == 2);
  CHECK(e.contains(flatten(QMat::identity(6))));
  CHECK(e.contains(flatten(*builtin_model().acs)));
}

TEST_CASE("with no isotropy every endomorphism is invariant") {
  LieAlgebra g = zoo::abelian(6);
  HomogeneousSplit s = make_split(g, QMat(0, 6), QMat::identity(6));
  CHECK(invariant_endomorphisms(s).dim() == 36);
}

TEST_CASE("an irreducible isotropy action has a one-dimensional commutant") {
  LieAlgebra g5 = semidirect_product(zoo::sl2(), zoo::abelian(2), zoo::sl2_action_v1());
  HomogeneousSplit s = make_split(g5, zoo::rows_from_indices(5, {0, 1, 2}),
                                  zoo::rows_from_indices(5, {3, 4}));
  CHECK(invariant_endomorphisms(s).dim() == 1);

  auto outcome = solve_invariant_acs(s);
  CHECK(outcome.status == AcsStatus::NoRationalSolution);
  CHECK(outcome.invariant_dim == 1);
}

TEST_CASE("the built-in split has exactly one invariant ACS up to sign") {
  HomogeneousSplit s = builtin_split();
  auto outcome = solve_invariant_acs(s);
  REQUIRE(outcome.status == AcsStatus::Solved);
  CHECK(outcome.invariant_dim == 2);
  REQUIRE(outcome.solutions.size() == 2);
  QMat j0 = *builtin_model().acs;
  bool has_plus = (outcome.solutions[0] == j0) || (outcome.solutions[1] == j0);
  bool has_minus = (outcome.solutions[0] == -j0) || (outcome.solutions[1] == -j0);
  CHECK(has_plus);
  CHECK(has_minus);
  for (const QMat& j : outcome.solutions) CHECK(verify_acs_invariance(s, j).invariant);
}

TEST_CASE("the sl2 split admits no invariant ACS, certified on a stable subspace") {
  using namespace builtin;
  Model m = builtin_model();
  HomogeneousSplit s = make_split(m.algebra, zoo::rows_from_indices(9, {h, e, f}),
                                  zoo::rows_from_indices(9, {z, b, x1, x2, x3, x4}));
  Subspace end = invariant_endomorphisms(s);
  CHECK(end.dim() == 5);
  auto outcome = solve_invariant_acs(s);
  CHECK(outcome.status == AcsStatus::NoRationalSolution);
  CHECK(outcome.invariant_dim == 5);
}

TEST_CASE("a free two-dimensional complement is refused, not searched") {
  LieAlgebra g = zoo::abelian(2);
  HomogeneousSplit s = make_split(g, QMat(0, 2), QMat::identity(2));
  auto outcome = solve_invariant_acs(s);
  CHECK(outcome.status == AcsStatus::Unsupported);
  CHECK(outcome.invariant_dim == 4);
}

TEST_CASE("odd-dimensional complements never carry an ACS") {
  LieAlgebra g = zoo::heisenberg(2);
  HomogeneousSplit s = make_split(g, zoo::rows_from_indices(5, {0, 1}),
                                  zoo::rows_from_indices(5, {2, 3, 4}));
  auto outcome = solve_invariant_acs(s);
  CHECK(outcome.status == AcsStatus::NoRationalSolution);
}

TEST_CASE("invariance verification and its failure witnesses") {
  HomogeneousSplit s = builtin_split();
  QMat j0 = *builtin_model().acs;
  CHECK(verify_acs_invariance(s, j0).invariant);
  CHECK(verify_acs_invariance(s, -j0).invariant);

  // A J with the wrong pairing (z <-> x3) squares to -id but is not invariant.
  QMat bad(6, 6);
  bad(mx3, mz) = 1, bad(mz, mx3) = -1;
  bad(mx2, mb) = -1, bad(mb, mx2) = 1;
  bad(mx4, me) = 1, bad(me, mx4) = -1;
  auto v = verify_acs_invariance(s, bad);
  CHECK_FALSE(v.invariant);
  auto vneg = verify_acs_invariance(s, -bad);
  CHECK_FALSE(vneg.invariant);

  CHECK_THROWS_AS(verify_acs_invariance(s, QMat::identity(6)), NotACS);
}

TEST_CASE("the invariant pseudo-Hermitian metric is unique up to scale") {
  HomogeneousSplit s = builtin_split();
  QMat j0 = *builtin_model().acs;
  Subspace forms = invariant_hermitian_forms(s, j0);
  REQUIRE(forms.dim() == 1);

  // The canonical basis vector is proportional to the expected Gram matrix.
  QMat g0 = builtin_metric_gram();
  VecQ gen = forms.basis_vector(0);
  CHECK(gen == vec_scale(Rational(2), flatten(g0)));  // RREF scales the 1/2 pivot to 1

  QMat gram = unflatten(gen, 6, 6);
  CHECK(gram == gram.transpose());
  // Invariance and J-compatibility hold bit-exactly.
  for (std::size_t x = 0; x < 3; ++x) {
    const QMat& r = s.isotropy.rho[x];
    CHECK((r.transpose() * gram + gram * r).is_zero());
  }
  CHECK(j0.transpose() * gram * j0 == gram);

  auto [pos, neg] = signature(gram);
  CHECK(pos == 2);
  CHECK(neg == 4);
}

TEST_CASE("with no isotropy the J-compatible symmetric forms on the plane are a line") {
  LieAlgebra g = zoo::abelian(2);
  HomogeneousSplit s = make_split(g, QMat(0, 2), QMat::identity(2));
  QMat j(2, 2);
  j(1, 0) = 1, j(0, 1) = -1;
  Subspace forms = invariant_hermitian_forms(s, j);
  CHECK(forms.dim() == 1);
  CHECK(forms.contains(flatten(QMat::identity(2))));
}

TEST_CASE("a non-closed subalgebra is rejected by make_split") {
  using namespace builtin;
  Model m = builtin_model();
  QMat bad_h = zoo::rows_from_indices(9, {x1, e});
  QMat comp = zoo::rows_from_indices(9, {z, b, x2, x3, x4, h, f});
  CHECK_THROWS_AS(make_split(m.algebra, bad_h, comp), NotClosed);
}

TEST_CASE("signature by congruence diagonalization") {
  CHECK(signature(QMat{{1, 0}, {0, -1}}) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(signature(QMat{{0, 1}, {1, 0}}) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(signature(QMat{{0, 0}, {0, 0}}) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(signature(QMat{{2, 1}, {1, 2}}) == std::pair<std::size_t, std::size_t>{2, 0});
  CHECK(signature(builtin_metric_gram()) == std::pair<std::size_t, std::size_t>{2, 4});
  CHECK_THROWS_AS(signature(QMat{{0, 1}, {2, 0}}), InvalidInput);
}

TEST_CASE("Nijenhuis tensor of the built-in structure") {
  HomogeneousSplit s = builtin_split();
  QMat j0 = *builtin_model().acs;
  NijenhuisForm n = nijenhuis_tensor(s, j0);

  // N(z, b) = 4z: [Jz, Jb] = [x2, -x3] = 3z, -[z,b] = 2z, -J[x2, b] = -z.
  VecQ expect(6, Rational(0));
  expect[mz] = 4;
  CHECK(n.values.row(pair_index(6, mz, mb)) == expect);

  SECTION("alternating and J-antilinear") {
    for (std::size_t i = 0; i < 6; ++i) {
      VecQ u(6, Rational(0));
      u[i] = 1;
      CHECK(vec_is_zero(n.eval(u, u, 6)));
    }
    for (const auto& [i, j] : pair_list(6)) {
      VecQ u(6, Rational(0)), v(6, Rational(0));
      u[i] = 1, v[j] = 1;
      CHECK(n.eval(j0.apply(u), v, 6) == vec_scale(Rational(-1), j0.apply(n.eval(u, v, 6))));
    }
  }

  SECTION("equivariant under the isotropy action") {
    for (std::size_t x = 0; x < 3; ++x) {
      const QMat& r = s.isotropy.rho[x];
      for (const auto& [i, j] : pair_list(6)) {
        VecQ u(6, Rational(0)), v(6, Rational(0));
        u[i] = 1, v[j] = 1;
        VecQ lhs = r.apply(n.eval(u, v, 6));
        VecQ rhs = vec_add(n.eval(r.apply(u), v, 6), n.eval(u, r.apply(v), 6));
        CHECK(lhs == rhs);
      }
    }
  }

  SECTION("independent of the choice of lifts") {
    Rng rng(20250810);
    for (int trial = 0; trial < 20; ++trial) {
      QMat w = rng.matrix(3, 6, 3, 2);
      NijenhuisForm perturbed = nijenhuis_tensor(s, j0, &w);
      CHECK(perturbed.values == n.values);
    }
  }

  SECTION("a non-invariant J is refused") {
    QMat bad(6, 6);
    bad(mx3, mz) = 1, bad(mz, mx3) = -1;
    bad(mx2, mb) = -1, bad(mb, mx2) = 1;
    bad(mx4, me) = 1, bad(me, mx4) = -1;
    CHECK_THROWS_AS(nijenhuis_tensor(s, bad), NotInvariant);
  }
}

TEST_CASE("nondegeneracy certificate of the built-in structure") {
  HomogeneousSplit s = builtin_split();
  QMat j0 = *builtin_model().acs;
  NijenhuisForm n = nijenhuis_tensor(s, j0);
  auto report = nondegeneracy_report(s, j0, n);
  CHECK(report.rank == 6);
  CHECK(report.nondegenerate);
  CHECK_FALSE(report.det_certificate.is_zero());
  CHECK(report.rank % 2 == 0);
}

TEST_CASE("flat structures are degenerate of rank zero") {
  LieAlgebra g = zoo::abelian(6);
  HomogeneousSplit s = make_split(g, QMat(0, 6), QMat::identity(6));
  QMat j(6, 6);
  j(1, 0) = 1, j(0, 1) = -1;
  j(3, 2) = 1, j(2, 3) = -1;
  j(5, 4) = 1, j(4, 5) = -1;
  NijenhuisForm n = nijenhuis_tensor(s, j);
  CHECK(n.values.is_zero());
  auto report = nondegeneracy_report(s, j, n);
  CHECK(report.rank == 0);
  CHECK_FALSE(report.nondegenerate);
  CHECK(report.det_certificate.is_zero());
}

TEST_CASE("a doctored form with a type component is caught") {
  HomogeneousSplit s = builtin_split();
  QMat j0 = *builtin_model().acs;
  NijenhuisForm doctored;
  doctored.values = QMat(15, 6);
  doctored.values(pair_index(6, mz, mb), mz) = 1;  // N(z,b) = z violates antilinearity
  CHECK_THROWS_AS(nondegeneracy_report(s, j0, doctored), TypeComponentLeak);
}
