#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecheck/matrix.hpp"
#include "liecheck/polynomial.hpp"

namespace liecheck {

struct AntisymmetryViolation : Error {
  std::size_t i, j, k;
  AntisymmetryViolation(std::size_t i_, std::size_t j_, std::size_t k_)
      : Error("structure constants are not antisymmetric at (" + std::to_string(i_) + "," +
              std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct JacobiFailure : Error {
  using Error::Error;
};

struct NotClosed : Error {
  std::size_t i, j;
  VecQ residual;
  NotClosed(std::size_t i_, std::size_t j_, VecQ res)
      : Error("bracket of generators " + std::to_string(i_) + "," + std::to_string(j_) +
              " leaves the span"),
        i(i_), j(j_), residual(std::move(res)) {}
};

struct ActionNotDerivation : Error {
  std::size_t generator, x, y;
  ActionNotDerivation(std::size_t g, std::size_t x_, std::size_t y_)
      : Error("action of generator " + std::to_string(g) +
              " violates the Leibniz rule on basis pair (" + std::to_string(x_) + "," +
              std::to_string(y_) + ")"),
        generator(g), x(x_), y(y_) {}
};

struct ActionNotRepresentation : Error {
  std::size_t i, j;
  ActionNotRepresentation(std::size_t i_, std::size_t j_)
      : Error("action matrices do not represent the bracket of generators " + std::to_string(i_) +
              "," + std::to_string(j_)),
        i(i_), j(j_) {}
};

struct NonRationalSpectrum : Error {
  Poly factor;  // the root-free factor of the characteristic polynomial
  explicit NonRationalSpectrum(Poly f)
      : Error("characteristic polynomial does not split over the rationals"),
        factor(std::move(f)) {}
};

struct NotInvariantSubspace : Error {
  using Error::Error;
};

inline std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
  return out;
}

/// Finite-dimensional algebra given by its structure-constant tensor:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry in (i, j) is required by
/// every operation; the Jacobi identity is a property checked by
/// jacobi_defect, not an invariant of the type.
struct LieAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  VecQ c;  // flattened (i * dim + j) * dim + k

  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t n, std::vector<std::string> basis_labels = {})
      : dim(n),
        labels(basis_labels.empty() ? default_labels(n) : std::move(basis_labels)),
        c(n * n * n, Rational(0)) {
    if (labels.size() != dim) throw InvalidInput("label count does not match dimension");
  }

  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * dim + j) * dim + k];
  }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return c[(i * dim + j) * dim + k];
  }

  /// Installs [e_i, e_j] and its antisymmetric counterpart.
  void set_bracket(std::size_t i, std::size_t j,
                   const std::vector<std::pair<std::size_t, Rational>>& terms) {
    if (i >= dim || j >= dim || i == j) throw InvalidInput("set_bracket indices");
    for (const auto& [k, v] : terms) {
      if (k >= dim) throw InvalidInput("set_bracket target index");
      at(i, j, k) = v;
      at(j, i, k) = -v;
    }
  }

  VecQ bracket(const VecQ& x, const VecQ& y) const {
    if (x.size() != dim || y.size() != dim) throw DimensionMismatch("bracket operand length");
    VecQ out(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        const Rational f = x[i] * y[j];
        for (std::size_t k = 0; k < dim; ++k)
          if (at(i, j, k) != 0) out[k] += f * at(i, j, k);
      }
    }
    return out;
  }

  /// Matrix of ad(x): column c holds the coordinates of [x, e_c].
  QMat ad(const VecQ& x) const {
    QMat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (at(i, j, k) != 0) m(k, j) += x[i] * at(i, j, k);
    }
    return m;
  }

  QMat ad_basis(std::size_t i) const {
    VecQ x(dim, Rational(0));
    x[i] = 1;
    return ad(x);
  }

  VecQ basis_vector(std::size_t i) const {
    VecQ x(dim, Rational(0));
    x[i] = 1;
    return x;
  }

  /// First offending triple, if the tensor fails c[i][j][k] = -c[j][i][k].
  std::optional<AntisymmetryViolation> antisymmetry_violation() const {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (at(i, j, k) != -at(j, i, k)) return AntisymmetryViolation(i, j, k);
    return std::nullopt;
  }
};

struct JacobiDefect {
  std::size_t i, j, k;
  VecQ defect;
};

/// All triples i<j<k violating [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0,
/// with their exact defects. Empty iff the tensor defines a Lie algebra.
inline std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& l) {
  if (auto v = l.antisymmetry_violation()) throw *v;
  std::vector<JacobiDefect> out;
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i + 1; j < l.dim; ++j)
      for (std::size_t k = j + 1; k < l.dim; ++k) {
        VecQ d = vec_add(
            vec_add(l.bracket(l.basis_vector(i), l.bracket(l.basis_vector(j), l.basis_vector(k))),
                    l.bracket(l.basis_vector(j), l.bracket(l.basis_vector(k), l.basis_vector(i)))),
            l.bracket(l.basis_vector(k), l.bracket(l.basis_vector(i), l.basis_vector(j))));
        if (!vec_is_zero(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

inline void require_lie_algebra(const LieAlgebra& l) {
  auto defects = jacobi_defect(l);
  if (!defects.empty())
    throw JacobiFailure("Jacobi identity fails on " + std::to_string(defects.size()) +
                        " basis triple(s); first at (" + std::to_string(defects[0].i) + "," +
                        std::to_string(defects[0].j) + "," + std::to_string(defects[0].k) + ")");
}

/// A subspace of a parent algebra given by an explicit generator list
/// (coordinate row vectors). Bracket closure is certified by
/// subalgebra_closure, not assumed.
struct Subalgebra {
  LieAlgebra parent;
  QMat generators;  // rows

  Subalgebra(LieAlgebra p, QMat gens) : parent(std::move(p)), generators(std::move(gens)) {
    if (generators.rows() > 0 && generators.cols() != parent.dim)
      throw DimensionMismatch("generator length does not match parent dimension");
    if (rank_of(generators) != generators.rows())
      throw InvalidInput("subalgebra generators are linearly dependent");
  }

  std::size_t dim() const { return generators.rows(); }
  Subspace span() const { return Subspace::from_rows(generators); }
};

/// Structure constants of a bracket-closed subspace in its own generator
/// basis; throws NotClosed with the offending pair and residual otherwise.
inline LieAlgebra subalgebra_closure(const Subalgebra& s,
                                     std::vector<std::string> labels = {}) {
  const std::size_t k = s.dim(), n = s.parent.dim;
  QMat gens_t(n, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) gens_t(c, r) = s.generators(r, c);

  Subspace sp = s.span();
  LieAlgebra sub(k, std::move(labels));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      VecQ b = s.parent.bracket(s.generators.row(i), s.generators.row(j));
      auto coords = solve_linear(gens_t, b);
      if (!coords) throw NotClosed(i, j, sp.reduce(b));
      std::vector<std::pair<std::size_t, Rational>> terms;
      for (std::size_t t = 0; t < k; ++t)
        if ((*coords)[t] != 0) terms.emplace_back(t, (*coords)[t]);
      sub.set_bracket(i, j, terms);
    }
  return sub;
}

/// New algebra in the basis given by the rows of p (expressed in the old
/// coordinates). p must be invertible.
inline LieAlgebra change_basis(const LieAlgebra& l, const QMat& p,
                               std::vector<std::string> labels = {}) {
  if (p.rows() != l.dim || p.cols() != l.dim) throw DimensionMismatch("change_basis matrix");
  const std::size_t n = l.dim;
  auto inv = inverse(p);
  if (!inv) throw InvalidInput("change_basis matrix is singular");
  const QMat& pinv = *inv;

  LieAlgebra out(n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VecQ br = l.bracket(p.row(i), p.row(j));
      std::vector<std::pair<std::size_t, Rational>> terms;
      for (std::size_t u = 0; u < n; ++u) {
        Rational v(0);
        for (std::size_t t = 0; t < n; ++t)
          if (br[t] != 0) v += br[t] * pinv(t, u);
        if (v != 0) terms.emplace_back(u, v);
      }
      out.set_bracket(i, j, terms);
    }
  return out;
}

// -- derivations ---------------------------------------------------------------

struct DerivationAlgebra {
  std::size_t dim = 0;
  std::vector<QMat> basis;
  std::size_t inner_dim = 0;
};

inline VecQ flatten(const QMat& m) {
  VecQ v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

inline QMat unflatten(const VecQ& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("unflatten size");
  QMat m(rows, cols);
  std::size_t idx = 0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[idx++];
  return m;
}

/// All D with D[x,y] = [Dx,y] + [x,Dy], found as the kernel of one exact
/// linear system in the n^2 matrix entries. inner_dim is the rank of ad.
inline DerivationAlgebra derivation_algebra(const LieAlgebra& l) {
  require_lie_algebra(l);
  const std::size_t n = l.dim;
  const std::size_t pairs = n * (n - 1) / 2;
  QMat sys(pairs * n, n * n);
  std::size_t eq = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // coefficient of D[r][s] in ([De_i,e_j] + [e_i,De_j] - D[e_i,e_j])_k
        for (std::size_t r = 0; r < n; ++r) {
          if (l.at(r, j, k) != 0) sys(eq + k, r * n + i) += l.at(r, j, k);
          if (l.at(i, r, k) != 0) sys(eq + k, r * n + j) += l.at(i, r, k);
        }
        for (std::size_t s = 0; s < n; ++s)
          if (l.at(i, j, s) != 0) sys(eq + k, k * n + s) -= l.at(i, j, s);
      }
      eq += n;
    }

  DerivationAlgebra out;
  QMat ker = kernel_basis(sys);
  out.dim = ker.rows();
  for (std::size_t r = 0; r < ker.rows(); ++r) out.basis.push_back(unflatten(ker.row(r), n, n));

  QMat ad_rows(0, n * n);
  for (std::size_t i = 0; i < n; ++i) ad_rows.append_row(flatten(l.ad_basis(i)));
  out.inner_dim = rank_of(ad_rows);
  return out;
}

/// Quotient of the derivation algebra by the inner derivations, as a Lie
/// algebra on a complement of ad(L) inside der(L).
inline LieAlgebra outer_derivation_algebra(const LieAlgebra& l) {
  const std::size_t n = l.dim;
  DerivationAlgebra der = derivation_algebra(l);

  QMat ad_rows(0, n * n);
  for (std::size_t i = 0; i < n; ++i) ad_rows.append_row(flatten(l.ad_basis(i)));
  Subspace inner = Subspace::from_rows(ad_rows);

  QMat reduced(0, n * n);
  for (const QMat& d : der.basis) reduced.append_row(inner.reduce(flatten(d)));
  Subspace reps = Subspace::from_rows(reduced);

  const std::size_t q = reps.dim();
  std::vector<QMat> rep_mats;
  rep_mats.reserve(q);
  for (std::size_t r = 0; r < q; ++r) rep_mats.push_back(unflatten(reps.basis_vector(r), n, n));

  LieAlgebra out(q, default_labels(q, "D"));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) {
      VecQ br = inner.reduce(flatten(commutator(rep_mats[i], rep_mats[j])));
      auto coords = reps.coordinates(br);
      if (!coords) throw Error("inner derivations are not an ideal (internal inconsistency)");
      std::vector<std::pair<std::size_t, Rational>> terms;
      for (std::size_t t = 0; t < q; ++t)
        if ((*coords)[t] != 0) terms.emplace_back(t, (*coords)[t]);
      out.set_bracket(i, j, terms);
    }
  return out;
}

// -- semidirect products ---------------------------------------------------------

/// s ⋉ a for an action of s on a by derivations. Basis order: s block first,
/// then a block. Validates the Leibniz rule and the representation property
/// before assembling the table.
inline LieAlgebra semidirect_product(const LieAlgebra& s, const LieAlgebra& a,
                                     const std::vector<QMat>& action) {
  if (action.size() != s.dim) throw DimensionMismatch("one action matrix per s generator");
  for (const QMat& m : action)
    if (m.rows() != a.dim || m.cols() != a.dim)
      throw DimensionMismatch("action matrix shape");

  for (std::size_t g = 0; g < s.dim; ++g)
    for (std::size_t x = 0; x < a.dim; ++x)
      for (std::size_t y = x + 1; y < a.dim; ++y) {
        VecQ lhs = action[g].apply(a.bracket(a.basis_vector(x), a.basis_vector(y)));
        VecQ rhs = vec_add(a.bracket(action[g].col(x), a.basis_vector(y)),
                           a.bracket(a.basis_vector(x), action[g].col(y)));
        if (lhs != rhs) throw ActionNotDerivation(g, x, y);
      }

  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = i + 1; j < s.dim; ++j) {
      VecQ br = s.bracket(s.basis_vector(i), s.basis_vector(j));
      QMat expect(a.dim, a.dim);
      for (std::size_t t = 0; t < s.dim; ++t)
        if (br[t] != 0) expect = expect + br[t] * action[t];
      if (!(commutator(action[i], action[j]) == expect)) throw ActionNotRepresentation(i, j);
    }

  const std::size_t p = s.dim, n = p + a.dim;
  std::vector<std::string> labels = s.labels;
  labels.insert(labels.end(), a.labels.begin(), a.labels.end());
  LieAlgebra out(n, std::move(labels));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) {
        out.at(i, j, k) = s.at(i, j, k);
        out.at(j, i, k) = -s.at(i, j, k);
      }
  for (std::size_t x = 0; x < a.dim; ++x)
    for (std::size_t y = x + 1; y < a.dim; ++y)
      for (std::size_t k = 0; k < a.dim; ++k) {
        out.at(p + x, p + y, p + k) = a.at(x, y, k);
        out.at(p + y, p + x, p + k) = -a.at(x, y, k);
      }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t x = 0; x < a.dim; ++x)
      for (std::size_t k = 0; k < a.dim; ++k) {
        out.at(i, p + x, p + k) = action[i](k, x);
        out.at(p + x, i, p + k) = -action[i](k, x);
      }
  return out;
}

// -- spectra, trace form, structural fingerprint ---------------------------------

/// Rational eigenvalues (with algebraic multiplicity) of ad(x) restricted to
/// an invariant subspace. A non-split characteristic polynomial is an error
/// carrying the offending factor, never an approximation.
inline std::vector<std::pair<Rational, std::size_t>> weight_decomposition(
    const LieAlgebra& l, const VecQ& x, const Subspace& restrict_to) {
  if (restrict_to.ambient() != l.dim) throw DimensionMismatch("weight subspace ambient");
  QMat a = l.ad(x);
  const std::size_t r = restrict_to.dim();
  QMat m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    VecQ img = a.apply(restrict_to.basis_vector(i));
    auto coords = restrict_to.coordinates(img);
    if (!coords) throw NotInvariantSubspace("ad(x) does not preserve the subspace");
    for (std::size_t k = 0; k < r; ++k) m(k, i) = (*coords)[k];
  }
  auto rr = rational_roots(char_poly(m));
  if (rr.remaining.degree() > 0) throw NonRationalSpectrum(rr.remaining);
  auto roots = rr.roots;
  std::sort(roots.begin(), roots.end(),
            [](const auto& a_, const auto& b_) { return a_.first < b_.first; });
  return roots;
}

inline QMat killing_form(const LieAlgebra& l) {
  std::vector<QMat> ads;
  ads.reserve(l.dim);
  for (std::size_t i = 0; i < l.dim; ++i) ads.push_back(l.ad_basis(i));
  QMat k(l.dim, l.dim);
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i; j < l.dim; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

inline Subspace center_of(const LieAlgebra& l) {
  const std::size_t n = l.dim;
  QMat sys(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    QMat ad_i = l.ad_basis(i);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t cidx = 0; cidx < n; ++cidx) sys(cidx * n + k, i) = ad_i(k, cidx);
  }
  return Subspace::from_rows(kernel_basis(sys));
}

/// Span of all brackets [a, b] with a in A and b in B.
inline Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  QMat rows(0, l.dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      rows.append_row(l.bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::from_rows(rows);
}

struct StructureFingerprint {
  std::size_t center_dim = 0;
  std::vector<std::size_t> derived_series_dims;        // starting at dim L
  std::vector<std::size_t> lower_central_series_dims;  // starting at dim L
  std::size_t killing_rank = 0;
  bool solvable = false;
  bool nilpotent = false;
};

/// Cheap exact invariants that distinguish the algebras handled here;
/// a deliberate stand-in for isomorphism testing.
inline StructureFingerprint structure_fingerprint(const LieAlgebra& l) {
  require_lie_algebra(l);
  StructureFingerprint fp;
  fp.center_dim = center_of(l).dim();
  fp.killing_rank = rank_of(killing_form(l));

  Subspace full = Subspace::full(l.dim);
  Subspace d = full;
  fp.derived_series_dims.push_back(d.dim());
  while (true) {
    Subspace next = bracket_span(l, d, d);
    if (next.dim() == d.dim()) break;
    d = next;
    fp.derived_series_dims.push_back(d.dim());
  }
  fp.solvable = (d.dim() == 0);

  Subspace g = full;
  fp.lower_central_series_dims.push_back(g.dim());
  while (true) {
    Subspace next = bracket_span(l, full, g);
    if (next.dim() == g.dim()) break;
    g = next;
    fp.lower_central_series_dims.push_back(g.dim());
  }
  fp.nilpotent = (g.dim() == 0);
  return fp;
}

}  // namespace liecheck
