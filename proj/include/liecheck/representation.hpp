#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "liecheck/lie_algebra.hpp"
#include "liecheck/matrix.hpp"

namespace liecheck {

// Flattening conventions, fixed once for the whole library:
//   * tensor product A (x) B: basis index a * dim(B) + b (row-major);
//   * exterior squares: ordered pairs i < j, enumerated lexicographically;
//   * 1-cochains on h with values in V: index x * dim(V) + v;
//   * 2-cochains: index pair(x,y) * dim(V) + v.

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw InvalidInput("pair_index wants i < j < n");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

struct RepresentationInvalid : Error {
  std::size_t i, j;
  RepresentationInvalid(std::size_t i_, std::size_t j_)
      : Error("rho([x_i,x_j]) != [rho(x_i), rho(x_j)] on basis pair (" + std::to_string(i_) +
              "," + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

/// Finite-dimensional module of a Lie algebra: one action matrix per basis
/// element. Bracket compatibility is checked on construction.
struct Representation {
  LieAlgebra algebra;  // the acting algebra, with its own structure constants
  std::size_t dim = 0;
  std::vector<QMat> rho;

  QMat act(const VecQ& x) const {
    if (x.size() != algebra.dim) throw DimensionMismatch("act: element length");
    QMat m(dim, dim);
    for (std::size_t i = 0; i < algebra.dim; ++i)
      if (x[i] != 0) m = m + x[i] * rho[i];
    return m;
  }
};

inline Representation make_representation(LieAlgebra algebra, std::size_t dim,
                                           std::vector<QMat> rho) {
  if (rho.size() != algebra.dim) throw DimensionMismatch("one action matrix per basis element");
  for (const QMat& m : rho)
    if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("action matrix shape");
  for (std::size_t i = 0; i < algebra.dim; ++i)
    for (std::size_t j = i + 1; j < algebra.dim; ++j) {
      QMat expect(dim, dim);
      for (std::size_t k = 0; k < algebra.dim; ++k)
        if (algebra.at(i, j, k) != 0) expect = expect + algebra.at(i, j, k) * rho[k];
      if (!(commutator(rho[i], rho[j]) == expect)) throw RepresentationInvalid(i, j);
    }
  return Representation{std::move(algebra), dim, std::move(rho)};
}

inline Representation trivial_rep(const LieAlgebra& algebra, std::size_t dim) {
  return make_representation(algebra, dim, std::vector<QMat>(algebra.dim, QMat(dim, dim)));
}

inline Representation adjoint_rep(const LieAlgebra& algebra) {
  std::vector<QMat> rho;
  rho.reserve(algebra.dim);
  for (std::size_t i = 0; i < algebra.dim; ++i) rho.push_back(algebra.ad_basis(i));
  const std::size_t dim = algebra.dim;
  return make_representation(algebra, dim, std::move(rho));
}

/// Dual module: rho*(x) = -rho(x)^T.
inline Representation dual_rep(const Representation& r) {
  std::vector<QMat> rho;
  rho.reserve(r.rho.size());
  for (const QMat& m : r.rho) rho.push_back(-m.transpose());
  return make_representation(r.algebra, r.dim, std::move(rho));
}

/// Tensor product module acting by the Leibniz rule.
inline Representation tensor_rep(const Representation& a, const Representation& b) {
  std::vector<QMat> rho;
  rho.reserve(a.rho.size());
  QMat ia = QMat::identity(a.dim), ib = QMat::identity(b.dim);
  for (std::size_t i = 0; i < a.rho.size(); ++i)
    rho.push_back(kron(a.rho[i], ib) + kron(ia, b.rho[i]));
  return make_representation(a.algebra, a.dim * b.dim, std::move(rho));
}

/// Second exterior power of the dual: alternating 2-forms on V with
/// (x.w)(u,v) = -w(rho(x)u, v) - w(u, rho(x)v), in the ordered-pair basis.
inline Representation wedge2_dual_rep(const Representation& r) {
  const std::size_t n = r.dim;
  const auto pairs = pair_list(n);
  std::vector<QMat> rho;
  rho.reserve(r.rho.size());
  for (const QMat& m : r.rho) {
    QMat w(pairs.size(), pairs.size());
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      const auto [i, j] = pairs[col];
      for (std::size_t row = 0; row < pairs.size(); ++row) {
        const auto [p, q] = pairs[row];
        Rational v(0);
        if (q == j) v -= m(i, p);
        if (q == i) v += m(j, p);
        if (p == i) v -= m(j, q);
        if (p == j) v += m(i, q);
        w(row, col) = v;
      }
    }
    rho.push_back(std::move(w));
  }
  return make_representation(r.algebra, pair_count(r.dim), std::move(rho));
}

// -- module recipes --------------------------------------------------------------

/// Expression tree for module construction over the atoms
///   m (the isotropy module) and h (the adjoint module of the subalgebra),
/// with grammar  expr := atom | "dual(" expr ")" | expr "⊗" expr
///                     | "wedge2dual(m)⊗" atom.
struct ModuleExpr {
  enum class Kind { AtomM, AtomH, Dual, Tensor, Wedge2DualM };
  Kind kind = Kind::AtomM;
  std::vector<ModuleExpr> children;

  std::string str() const {
    switch (kind) {
      case Kind::AtomM: return "m";
      case Kind::AtomH: return "h";
      case Kind::Dual: return "dual(" + children[0].str() + ")";
      case Kind::Tensor: return children[0].str() + "⊗" + children[1].str();
      case Kind::Wedge2DualM: return "wedge2dual(m)";
    }
    return {};
  }
};

namespace detail {

struct RecipeParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw InvalidInput("module recipe: " + what + " at offset " + std::to_string(pos));
  }
  bool eat(std::string_view tok) {
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  ModuleExpr parse_term() {
    if (eat("wedge2dual(m)")) return {ModuleExpr::Kind::Wedge2DualM, {}};
    if (eat("dual(")) {
      ModuleExpr inner = parse_expr();
      if (!eat(")")) fail("expected ')'");
      return {ModuleExpr::Kind::Dual, {std::move(inner)}};
    }
    if (eat("m")) return {ModuleExpr::Kind::AtomM, {}};
    if (eat("h")) return {ModuleExpr::Kind::AtomH, {}};
    fail("expected 'm', 'h', 'dual(', or 'wedge2dual(m)'");
  }

  ModuleExpr parse_expr() {
    ModuleExpr left = parse_term();
    while (eat("⊗") || eat("*"))
      left = ModuleExpr{ModuleExpr::Kind::Tensor, {std::move(left), parse_term()}};
    return left;
  }
};

}  // namespace detail

/// Accepts the UTF-8 tensor sign "⊗" (with "*" as a shell-friendly alias).
inline ModuleExpr parse_module_expr(std::string_view text) {
  detail::RecipeParser p{text};
  ModuleExpr e = p.parse_expr();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

/// Evaluates a recipe over concrete atoms. The two atoms must share the same
/// acting algebra.
inline Representation build_module(const ModuleExpr& e, const Representation& atom_m,
                                   const Representation& atom_h) {
  switch (e.kind) {
    case ModuleExpr::Kind::AtomM: return atom_m;
    case ModuleExpr::Kind::AtomH: return atom_h;
    case ModuleExpr::Kind::Dual: return dual_rep(build_module(e.children[0], atom_m, atom_h));
    case ModuleExpr::Kind::Tensor:
      return tensor_rep(build_module(e.children[0], atom_m, atom_h),
                        build_module(e.children[1], atom_m, atom_h));
    case ModuleExpr::Kind::Wedge2DualM: return wedge2_dual_rep(atom_m);
  }
  throw InvalidInput("malformed module recipe tree");
}

}  // namespace liecheck
