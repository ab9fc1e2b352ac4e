#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecheck/cohomology.hpp"
#include "liecheck/gaussian.hpp"
#include "liecheck/lie_algebra.hpp"
#include "liecheck/polynomial.hpp"
#include "liecheck/representation.hpp"

namespace liecheck {

struct NotComplement : Error {
  using Error::Error;
};
struct NotACS : Error {
  using Error::Error;
};
struct NotInvariant : Error {
  using Error::Error;
};
struct UnsupportedDimension : Error {
  std::size_t dim;
  explicit UnsupportedDimension(std::size_t d, const std::string& what)
      : Error(what + " (invariant space dimension " + std::to_string(d) + ")"), dim(d) {}
};
struct TypeComponentLeak : Error {
  using Error::Error;
};

/// A choice of complement m for a subalgebra h in g, with the induced data:
/// the isotropy action rho on m, the h-valued part phi of [h, m], and the two
/// components theta_m, theta_h of the bracket [m, m].
struct HomogeneousSplit {
  LieAlgebra g;
  QMat h_gens;   // rows: generators of h in g coordinates
  QMat m_basis;  // rows: complement basis in g coordinates
  LieAlgebra h;  // structure constants of h in its generator basis

  Representation isotropy;  // rho: h acting on m = g/h
  std::vector<QMat> phi;    // phi[x]: dim_h x dim_m, phi(x,u) = pr_h [x', u']
  QMat theta_m;             // row pair(u,v): pr_m [u', v']
  QMat theta_h;             // row pair(u,v): pr_h [u', v']

  QMat mixed_inverse;  // inverse of the column matrix (h_gens | m_basis)

  std::size_t dim_h() const { return h_gens.rows(); }
  std::size_t dim_m() const { return m_basis.rows(); }

  /// Splits a g-vector into (h coordinates, m coordinates).
  std::pair<VecQ, VecQ> decompose(const VecQ& v) const {
    VecQ mixed = mixed_inverse.apply(v);
    VecQ hpart(mixed.begin(), mixed.begin() + dim_h());
    VecQ mpart(mixed.begin() + dim_h(), mixed.end());
    return {std::move(hpart), std::move(mpart)};
  }

  VecQ lift_m(const VecQ& mcoords) const {
    VecQ v(g.dim, Rational(0));
    for (std::size_t i = 0; i < dim_m(); ++i)
      if (mcoords[i] != 0) v = vec_add(v, vec_scale(mcoords[i], m_basis.row(i)));
    return v;
  }
  VecQ lift_h(const VecQ& hcoords) const {
    VecQ v(g.dim, Rational(0));
    for (std::size_t i = 0; i < dim_h(); ++i)
      if (hcoords[i] != 0) v = vec_add(v, vec_scale(hcoords[i], h_gens.row(i)));
    return v;
  }

  /// phi(x, u) in h coordinates for x, u in split coordinates.
  VecQ phi_eval(const VecQ& x, const VecQ& u) const {
    VecQ out(dim_h(), Rational(0));
    for (std::size_t i = 0; i < dim_h(); ++i) {
      if (x[i] == 0) continue;
      out = vec_add(out, vec_scale(x[i], phi[i].apply(u)));
    }
    return out;
  }

  /// The h-part of [h, m] as a 1-cochain valued in m* (x) h.
  Cochain phi_cochain() const {
    const std::size_t md = dim_m(), hd = dim_h();
    VecQ c(hd * md * hd, Rational(0));
    for (std::size_t x = 0; x < hd; ++x)
      for (std::size_t u = 0; u < md; ++u)
        for (std::size_t t = 0; t < hd; ++t) c[x * (md * hd) + u * hd + t] = phi[x](t, u);
    return {1, std::move(c)};
  }
  /// theta_m as a 0-cochain valued in wedge2dual(m) (x) m.
  Cochain theta_m_cochain() const {
    const std::size_t md = dim_m();
    VecQ c(pair_count(md) * md, Rational(0));
    for (std::size_t p = 0; p < pair_count(md); ++p)
      for (std::size_t w = 0; w < md; ++w) c[p * md + w] = theta_m(p, w);
    return {0, std::move(c)};
  }
  /// theta_h as a 0-cochain valued in wedge2dual(m) (x) h.
  Cochain theta_h_cochain() const {
    const std::size_t md = dim_m(), hd = dim_h();
    VecQ c(pair_count(md) * hd, Rational(0));
    for (std::size_t p = 0; p < pair_count(md); ++p)
      for (std::size_t t = 0; t < hd; ++t) c[p * hd + t] = theta_h(p, t);
    return {0, std::move(c)};
  }
};

/// Validates that h is a subalgebra and h_gens ∪ m_basis a basis of g, then
/// derives rho, phi, theta_m, theta_h by exact projection.
inline HomogeneousSplit make_split(const LieAlgebra& g, const QMat& h_gens, const QMat& m_basis) {
  if (h_gens.rows() + m_basis.rows() != g.dim)
    throw NotComplement("h generators plus complement must have size dim g");

  QMat columns(g.dim, g.dim);
  for (std::size_t r = 0; r < h_gens.rows(); ++r)
    for (std::size_t c = 0; c < g.dim; ++c) columns(c, r) = h_gens(r, c);
  for (std::size_t r = 0; r < m_basis.rows(); ++r)
    for (std::size_t c = 0; c < g.dim; ++c) columns(c, h_gens.rows() + r) = m_basis(r, c);
  auto inv = inverse(columns);
  if (!inv) throw NotComplement("chosen complement does not complete h to a basis of g");

  HomogeneousSplit s;
  s.g = g;
  s.h_gens = h_gens;
  s.m_basis = m_basis;
  s.mixed_inverse = std::move(*inv);
  s.h = subalgebra_closure(Subalgebra(g, h_gens));

  const std::size_t hd = s.dim_h(), md = s.dim_m();
  std::vector<QMat> rho(hd, QMat(md, md));
  s.phi.assign(hd, QMat(hd, md));
  for (std::size_t x = 0; x < hd; ++x)
    for (std::size_t u = 0; u < md; ++u) {
      auto [hp, mp] = s.decompose(g.bracket(h_gens.row(x), m_basis.row(u)));
      for (std::size_t r = 0; r < md; ++r) rho[x](r, u) = mp[r];
      for (std::size_t t = 0; t < hd; ++t) s.phi[x](t, u) = hp[t];
    }
  s.isotropy = make_representation(s.h, md, std::move(rho));

  s.theta_m = QMat(pair_count(md), md);
  s.theta_h = QMat(pair_count(md), hd);
  for (const auto& [i, j] : pair_list(md)) {
    auto [hp, mp] = s.decompose(g.bracket(m_basis.row(i), m_basis.row(j)));
    const std::size_t p = pair_index(md, i, j);
    for (std::size_t w = 0; w < md; ++w) s.theta_m(p, w) = mp[w];
    for (std::size_t t = 0; t < hd; ++t) s.theta_h(p, t) = hp[t];
  }
  return s;
}

/// Builds a module over h from a recipe, with atoms m = the isotropy module
/// and h = the adjoint module of the subalgebra.
inline Representation build_representation(const ModuleExpr& e, const HomogeneousSplit& s) {
  return build_module(e, s.isotropy, adjoint_rep(s.h));
}
inline Representation build_representation(std::string_view recipe, const HomogeneousSplit& s) {
  return build_representation(parse_module_expr(recipe), s);
}

/// All endomorphisms of m commuting with the isotropy action, flattened
/// row-major into Q^(dim_m^2).
inline Subspace invariant_endomorphisms(const HomogeneousSplit& s) {
  const std::size_t n = s.dim_m(), hd = s.dim_h();
  QMat sys(hd * n * n, n * n);
  for (std::size_t x = 0; x < hd; ++x) {
    const QMat& r = s.isotropy.rho[x];
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) {
        const std::size_t eq = x * n * n + row * n + col;
        for (std::size_t t = 0; t < n; ++t) {
          if (r(row, t) != 0) sys(eq, t * n + col) += r(row, t);
          if (r(t, col) != 0) sys(eq, row * n + t) -= r(t, col);
        }
      }
  }
  return Subspace::from_rows(kernel_basis(sys));
}

struct AcsVerification {
  bool invariant = true;
  std::size_t generator = 0, vector = 0;  // witness when not invariant
};

/// Checks rho(x). J = J . rho(x) for every generator; J^2 = -id is a
/// precondition, violations are NotACS.
inline AcsVerification verify_acs_invariance(const HomogeneousSplit& s, const QMat& j) {
  const std::size_t n = s.dim_m();
  if (j.rows() != n || j.cols() != n) throw DimensionMismatch("acs shape");
  if (!(j * j == -QMat::identity(n))) throw NotACS("J^2 != -id");
  for (std::size_t x = 0; x < s.dim_h(); ++x) {
    QMat d = commutator(s.isotropy.rho[x], j);
    if (d.is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        if (d(r, c) != 0) return {false, x, c};
  }
  return {};
}

enum class AcsStatus { Solved, NoRationalSolution, Unsupported };

struct AcsSolveOutcome {
  AcsStatus status = AcsStatus::NoRationalSolution;
  std::vector<QMat> solutions;     // closed under negation when nonempty
  std::size_t invariant_dim = 0;   // dim of the commutant of the isotropy action
  std::string detail;
};

namespace detail {

/// All rational J in the span of the given matrices with J^2 = -id.
/// Linearizes the quadratic system in the monomials t_i t_j, then factors
/// rank-one monomial points; every candidate is verified against J^2 = -id
/// before being reported. Supports spans of dimension <= 3 with solution
/// lines of affine dimension <= 1.
inline AcsSolveOutcome solve_acs_in_span(const std::vector<QMat>& basis) {
  AcsSolveOutcome out;
  out.invariant_dim = basis.size();
  const std::size_t k = basis.size();
  if (k == 0) {
    out.detail = "empty span";
    return out;
  }
  if (k > 3) {
    out.status = AcsStatus::Unsupported;
    out.detail = "quadratic solve limited to spans of dimension <= 3";
    return out;
  }
  const std::size_t n = basis[0].rows();

  std::vector<std::pair<std::size_t, std::size_t>> mono;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) mono.emplace_back(i, j);

  QMat sys(n * n, mono.size());
  for (std::size_t c = 0; c < mono.size(); ++c) {
    auto [i, j] = mono[c];
    QMat s = (i == j) ? basis[i] * basis[i] : basis[i] * basis[j] + basis[j] * basis[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t cc = 0; cc < n; ++cc) sys(r * n + cc, c) = s(r, cc);
  }
  VecQ rhs(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) rhs[i * n + i] = Rational(-1);

  auto particular = solve_linear(sys, rhs);
  if (!particular) {
    out.detail = "the quadratic system has no solution already at the linear level";
    return out;
  }
  QMat line = kernel_basis(sys);

  std::vector<VecQ> candidates;
  if (line.rows() == 0) {
    candidates.push_back(*particular);
  } else if (line.rows() == 1) {
    // Monomial points on the affine line that are symmetric rank <= 1:
    // collect the 2x2 minors of G(s) as polynomials in s and intersect roots.
    const VecQ dir = line.row(0);
    auto entry = [&](std::size_t i, std::size_t j) -> std::pair<Rational, Rational> {
      std::size_t a = std::min(i, j), b = std::max(i, j);
      for (std::size_t c = 0; c < mono.size(); ++c)
        if (mono[c] == std::pair{a, b}) return {(*particular)[c], dir[c]};
      throw Error("monomial lookup");
    };
    auto entry_poly = [&](std::size_t i, std::size_t j) {
      auto [c0, c1] = entry(i, j);
      return Poly({c0, c1});
    };
    std::vector<Poly> minors;
    for (std::size_t r1 = 0; r1 < k; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < k; ++r2)
        for (std::size_t c1 = 0; c1 < k; ++c1)
          for (std::size_t c2 = c1 + 1; c2 < k; ++c2) {
            Poly m = entry_poly(r1, c1) * entry_poly(r2, c2) -
                     entry_poly(r1, c2) * entry_poly(r2, c1);
            if (!m.is_zero()) minors.push_back(std::move(m));
          }
    if (minors.empty()) {
      out.status = AcsStatus::Unsupported;
      out.detail = "solution variety is positive-dimensional";
      return out;
    }
    for (const auto& [root, mult] : rational_roots(minors[0]).roots) {
      bool all = true;
      for (const Poly& m : minors)
        if (m.eval(root) != 0) {
          all = false;
          break;
        }
      if (!all) continue;
      VecQ point = *particular;
      for (std::size_t c = 0; c < mono.size(); ++c) point[c] += root * dir[c];
      candidates.push_back(std::move(point));
    }
  } else {
    out.status = AcsStatus::Unsupported;
    out.detail = "solution space of the linearized system has dimension " +
                 std::to_string(line.rows());
    return out;
  }

  auto mono_at = [&](const VecQ& point, std::size_t i, std::size_t j) {
    std::size_t a = std::min(i, j), b = std::max(i, j);
    for (std::size_t c = 0; c < mono.size(); ++c)
      if (mono[c] == std::pair{a, b}) return point[c];
    throw Error("monomial lookup");
  };

  for (const VecQ& point : candidates) {
    std::size_t d = k;
    for (std::size_t i = 0; i < k; ++i)
      if (mono_at(point, i, i) != 0) {
        d = i;
        break;
      }
    if (d == k) continue;  // zero diagonal: only t = 0 factors, not a root of -id
    auto td = rational_sqrt(mono_at(point, d, d));
    if (!td) continue;
    VecQ t(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) t[i] = mono_at(point, i, d) / *td;
    QMat j(n, n);
    for (std::size_t i = 0; i < k; ++i)
      if (t[i] != 0) j = j + t[i] * basis[i];
    if (j * j == -QMat::identity(n)) {
      if (std::find(out.solutions.begin(), out.solutions.end(), j) == out.solutions.end())
        out.solutions.push_back(j);
      QMat nj = -j;
      if (std::find(out.solutions.begin(), out.solutions.end(), nj) == out.solutions.end())
        out.solutions.push_back(nj);
    }
  }

  if (!out.solutions.empty()) {
    out.status = AcsStatus::Solved;
  } else {
    out.status = AcsStatus::NoRationalSolution;
    out.detail = "no rational square root of -id in the span";
  }
  return out;
}

}  // namespace detail

/// Solves J^2 = -id inside the commutant of the isotropy action. For
/// commutants of dimension > 3 a certificate of nonexistence is still
/// attempted by restricting to a subspace stable under the whole commutant
/// (any invariant J preserves such a subspace); otherwise the call refuses
/// rather than search numerically.
inline AcsSolveOutcome solve_invariant_acs(const HomogeneousSplit& s) {
  const std::size_t n = s.dim_m();
  Subspace e = invariant_endomorphisms(s);

  if (n % 2 == 1) {
    AcsSolveOutcome out;
    out.invariant_dim = e.dim();
    out.status = AcsStatus::NoRationalSolution;
    out.detail = "odd-dimensional complement: det(J)^2 = det(-id) = -1 is impossible";
    return out;
  }

  std::vector<QMat> basis;
  basis.reserve(e.dim());
  for (std::size_t r = 0; r < e.dim(); ++r) basis.push_back(unflatten(e.basis_vector(r), n, n));

  if (e.dim() <= 3) {
    auto out = detail::solve_acs_in_span(basis);
    out.invariant_dim = e.dim();
    return out;
  }

  // Candidate stable subspaces: images and kernels of the commutant basis.
  std::vector<Subspace> candidates;
  for (const QMat& a : basis) {
    candidates.push_back(Subspace::from_rows(a.transpose()));  // column space
    candidates.push_back(Subspace::from_rows(kernel_basis(a)));
  }
  for (const Subspace& w : candidates) {
    if (w.dim() == 0 || w.dim() == n) continue;
    bool stable = true;
    for (const QMat& a : basis) {
      for (std::size_t r = 0; r < w.dim() && stable; ++r)
        if (!w.contains(a.apply(w.basis_vector(r)))) stable = false;
      if (!stable) break;
    }
    if (!stable) continue;

    AcsSolveOutcome out;
    out.invariant_dim = e.dim();
    if (w.dim() % 2 == 1) {
      out.status = AcsStatus::NoRationalSolution;
      out.detail = "the commutant preserves a subspace of odd dimension " +
                   std::to_string(w.dim()) + "; an invariant J would restrict to it";
      return out;
    }
    // Restrict the commutant to w and solve there.
    QMat restricted_rows(0, w.dim() * w.dim());
    for (const QMat& a : basis) {
      QMat ra(w.dim(), w.dim());
      for (std::size_t c = 0; c < w.dim(); ++c) {
        auto coords = w.coordinates(a.apply(w.basis_vector(c)));
        for (std::size_t r = 0; r < w.dim(); ++r) ra(r, c) = (*coords)[r];
      }
      restricted_rows.append_row(flatten(ra));
    }
    Subspace rs = Subspace::from_rows(restricted_rows);
    if (rs.dim() > 3) continue;
    std::vector<QMat> rbasis;
    for (std::size_t r = 0; r < rs.dim(); ++r)
      rbasis.push_back(unflatten(rs.basis_vector(r), w.dim(), w.dim()));
    auto sub = detail::solve_acs_in_span(rbasis);
    if (sub.status == AcsStatus::NoRationalSolution) {
      out.status = AcsStatus::NoRationalSolution;
      out.detail = "no invariant square root of -id on a subspace of dimension " +
                   std::to_string(w.dim()) + " stable under the whole commutant (" +
                   sub.detail + ")";
      return out;
    }
  }

  AcsSolveOutcome out;
  out.invariant_dim = e.dim();
  out.status = AcsStatus::Unsupported;
  out.detail = "commutant dimension " + std::to_string(e.dim()) +
               " exceeds the exact quadratic solver's scope";
  return out;
}

/// Symmetric invariant forms compatible with J: B(rho(x)u, v) + B(u, rho(x)v) = 0
/// and B(Ju, Jv) = B(u, v), flattened row-major into Q^(dim_m^2).
inline Subspace invariant_hermitian_forms(const HomogeneousSplit& s, const QMat& j) {
  auto ver = verify_acs_invariance(s, j);  // NotACS when J^2 != -id
  if (!ver.invariant)
    throw NotInvariant("J does not commute with the isotropy action; generator " +
                       std::to_string(ver.generator));
  const std::size_t n = s.dim_m();
  QMat rows(0, n * n);
  // symmetry
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      VecQ eq(n * n, Rational(0));
      eq[r * n + c] = 1;
      eq[c * n + r] = -1;
      rows.append_row(eq);
    }
  // invariance: rho^T B + B rho = 0
  for (std::size_t x = 0; x < s.dim_h(); ++x) {
    const QMat& r = s.isotropy.rho[x];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        VecQ eq(n * n, Rational(0));
        for (std::size_t t = 0; t < n; ++t) {
          if (r(t, a) != 0) eq[t * n + b] += r(t, a);
          if (r(t, b) != 0) eq[a * n + t] += r(t, b);
        }
        if (!vec_is_zero(eq)) rows.append_row(eq);
      }
  }
  // J-compatibility: J^T B J - B = 0
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      VecQ eq(n * n, Rational(0));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (j(r, a) != 0 && j(c, b) != 0) eq[r * n + c] += j(r, a) * j(c, b);
      eq[a * n + b] -= 1;
      if (!vec_is_zero(eq)) rows.append_row(eq);
    }

  return Subspace::from_rows(kernel_basis(rows));
}

/// Exact signature (positives, negatives) of a symmetric matrix by congruence
/// diagonalization; rank = p + q.
inline std::pair<std::size_t, std::size_t> signature(QMat gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n || !(gram == gram.transpose()))
    throw InvalidInput("signature wants a symmetric matrix");
  std::size_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (gram(i, i) == 0) {
      std::size_t swap_j = n;
      for (std::size_t j = i + 1; j < n; ++j)
        if (gram(j, j) != 0) {
          swap_j = j;
          break;
        }
      if (swap_j < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(gram(i, c), gram(swap_j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(gram(r, i), gram(r, swap_j));
      } else {
        std::size_t off = n;
        for (std::size_t j = i + 1; j < n; ++j)
          if (gram(i, j) != 0) {
            off = j;
            break;
          }
        if (off == n) continue;  // zero row/column: rank deficit
        for (std::size_t c = 0; c < n; ++c) gram(i, c) += gram(off, c);
        for (std::size_t r = 0; r < n; ++r) gram(r, i) += gram(r, off);
      }
    }
    if (gram(i, i) == 0) continue;
    const Rational piv = gram(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational f = gram(j, i) / piv;
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) gram(j, c) -= f * gram(i, c);
      for (std::size_t r = 0; r < n; ++r) gram(r, j) -= f * gram(r, i);
    }
    (piv > 0 ? pos : neg) += 1;
  }
  return {pos, neg};
}

/// The alternating bilinear map N: m x m -> m attached to an invariant J,
/// stored by its values on ordered basis pairs.
struct NijenhuisForm {
  QMat values;  // row pair(i,j): N(u_i, u_j) in m coordinates

  /// Bilinear evaluation on arbitrary m-coordinate vectors.
  VecQ eval(const VecQ& u, const VecQ& v, std::size_t dim_m) const {
    VecQ out(dim_m, Rational(0));
    for (const auto& [i, j] : pair_list(dim_m)) {
      const Rational f = u[i] * v[j] - u[j] * v[i];
      if (f == 0) continue;
      out = vec_add(out, vec_scale(f, values.row(pair_index(dim_m, i, j))));
    }
    return out;
  }
};

/// N(u,v) = pr_m([Ju',Jv'] - [u',v']) - J pr_m[Ju',v'] - J pr_m[u',Jv'], with
/// the complement lifts, optionally perturbed by a linear map m -> h. J must
/// be invariant: otherwise the value would depend on the lifts, and the call
/// refuses.
inline NijenhuisForm nijenhuis_tensor(const HomogeneousSplit& s, const QMat& j,
                                      const QMat* lift_perturbation = nullptr) {
  auto ver = verify_acs_invariance(s, j);
  if (!ver.invariant)
    throw NotInvariant("J is not invariant (generator " + std::to_string(ver.generator) +
                       ", basis vector " + std::to_string(ver.vector) +
                       "); the Nijenhuis value would depend on the choice of lifts");
  const std::size_t n = s.dim_m();
  if (lift_perturbation &&
      (lift_perturbation->rows() != s.dim_h() || lift_perturbation->cols() != n))
    throw DimensionMismatch("lift perturbation must map m coordinates to h coordinates");

  auto lift = [&](const VecQ& mcoords) {
    VecQ v = s.lift_m(mcoords);
    if (lift_perturbation) v = vec_add(v, s.lift_h(lift_perturbation->apply(mcoords)));
    return v;
  };
  auto pr_m_bracket = [&](const VecQ& a, const VecQ& b) {
    return s.decompose(s.g.bracket(a, b)).second;
  };

  NijenhuisForm out;
  out.values = QMat(pair_count(n), n);
  for (const auto& [i, jx] : pair_list(n)) {
    VecQ u(n, Rational(0)), v(n, Rational(0));
    u[i] = 1;
    v[jx] = 1;
    VecQ lu = lift(u), lv = lift(v);
    VecQ lju = lift(j.col(i)), ljv = lift(j.col(jx));

    VecQ val = vec_sub(pr_m_bracket(lju, ljv), pr_m_bracket(lu, lv));
    val = vec_sub(val, j.apply(pr_m_bracket(lju, lv)));
    val = vec_sub(val, j.apply(pr_m_bracket(lu, ljv)));
    out.values.set_row(pair_index(n, i, jx), val);
  }
  return out;
}

struct NondegeneracyReport {
  std::size_t rank = 0;       // dimension of span{N(u_i, u_j)} over Q
  bool nondegenerate = false; // 6D notion: the complexified 3x3 map is invertible
  Gaussian det_certificate;   // det of that map; nonzero iff nondegenerate
};

/// Rank of the Nijenhuis form and, in real dimension 6, the complex
/// certificate: the matrix of N restricted to the (1,0)-space, valued in the
/// (0,1)-space, in the basis u_k - i J u_k. A component of N of two
/// (1,0)-vectors on the (1,0)-side contradicts J-antilinearity and is
/// reported as TypeComponentLeak.
inline NondegeneracyReport nondegeneracy_report(const HomogeneousSplit& s, const QMat& j,
                                                const NijenhuisForm& nf) {
  const std::size_t n = s.dim_m();
  if (nf.values.rows() != pair_count(n) || nf.values.cols() != n)
    throw DimensionMismatch("Nijenhuis form does not fit the split");
  NondegeneracyReport out;
  out.rank = rank_of(nf.values);
  if (n % 2 != 0) return out;
  const std::size_t c = n / 2;

  // Base vectors u with {u, Ju} a basis of m.
  std::vector<VecQ> base;
  QMat selected(0, n);
  for (std::size_t i = 0; i < n && base.size() < c; ++i) {
    VecQ u(n, Rational(0));
    u[i] = 1;
    QMat trial = selected;
    trial.append_row(u);
    trial.append_row(j.col(i));
    if (rank_of(trial) == trial.rows()) {
      selected = trial;
      base.push_back(u);
    }
  }
  if (base.size() != c) throw Error("could not assemble a J-adapted basis");

  // Columns: alpha_k = u_k - i J u_k, then their conjugates.
  GMat cols(n, n);
  for (std::size_t k = 0; k < c; ++k) {
    VecQ ju = j.apply(base[k]);
    for (std::size_t r = 0; r < n; ++r) {
      cols(r, k) = Gaussian(base[k][r], -ju[r]);
      cols(r, c + k) = Gaussian(base[k][r], ju[r]);
    }
  }

  GMat certificate(c, pair_count(c));
  for (const auto& [p, q] : pair_list(c)) {
    VecQ jup = j.apply(base[p]), juq = j.apply(base[q]);
    // N(alpha_p, alpha_q) = [N(u_p,u_q) - N(Ju_p,Ju_q)] - i [N(Ju_p,u_q) + N(u_p,Ju_q)]
    VecQ re = vec_sub(nf.eval(base[p], base[q], n), nf.eval(jup, juq, n));
    VecQ im = vec_add(nf.eval(jup, base[q], n), nf.eval(base[p], juq, n));
    VecG w(n);
    for (std::size_t r = 0; r < n; ++r) w[r] = Gaussian(re[r], -im[r]);
    auto x = solve_linear(cols, w);
    if (!x) throw Error("complexified basis failed to span");
    for (std::size_t k = 0; k < c; ++k)
      if (!(*x)[k].is_zero())
        throw TypeComponentLeak(
            "N of two (1,0)-vectors has a (1,0)-component; upstream invariance is broken");
    for (std::size_t k = 0; k < c; ++k)
      certificate(k, pair_index(c, p, q)) = (*x)[c + k];
  }
  if (certificate.rows() == certificate.cols()) {
    out.det_certificate = determinant(certificate);
    out.nondegenerate = !out.det_certificate.is_zero();
  }
  return out;
}

}  // namespace liecheck
