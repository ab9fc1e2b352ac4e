#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "liecheck/representation.hpp"

namespace liecheck {

/// Degree-k cochain on the acting algebra with module coefficients;
/// the flattening follows the conventions in representation.hpp.
struct Cochain {
  int degree = 0;
  VecQ c;
};

/// Matrix of the Chevalley-Eilenberg differential from k-cochains to
/// (k+1)-cochains:
///   k = 0:  (d theta)(x)   = rho(x) theta
///   k = 1:  (d psi)(x,y)   = rho(x) psi(y) - rho(y) psi(x) - psi([x,y])
/// Only these two degrees are needed; d1 * d0 = 0 holds exactly.
inline QMat ce_differential(const Representation& rep, int k) {
  const std::size_t hn = rep.algebra.dim, vn = rep.dim;
  if (k == 0) {
    QMat d(hn * vn, vn);
    for (std::size_t x = 0; x < hn; ++x)
      for (std::size_t r = 0; r < vn; ++r)
        for (std::size_t c = 0; c < vn; ++c) d(x * vn + r, c) = rep.rho[x](r, c);
    return d;
  }
  if (k == 1) {
    const auto pairs = pair_list(hn);
    QMat d(pairs.size() * vn, hn * vn);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const auto [x, y] = pairs[pi];
      for (std::size_t r = 0; r < vn; ++r) {
        for (std::size_t c = 0; c < vn; ++c) {
          if (rep.rho[x](r, c) != 0) d(pi * vn + r, y * vn + c) += rep.rho[x](r, c);
          if (rep.rho[y](r, c) != 0) d(pi * vn + r, x * vn + c) -= rep.rho[y](r, c);
        }
        for (std::size_t z = 0; z < hn; ++z)
          if (rep.algebra.at(x, y, z) != 0) d(pi * vn + r, z * vn + r) -= rep.algebra.at(x, y, z);
      }
    }
    return d;
  }
  throw InvalidInput("ce_differential supports degrees 0 and 1 only");
}

struct CohomologyReport {
  int degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_h = 0;
  QMat representatives;  // rows: cocycles spanning a complement of the coboundaries
  Subspace coboundaries;
};

/// H^0 (invariants) or H^1 (outer cocycles) with deterministic
/// echelon-complement representatives.
inline CohomologyReport cohomology(const Representation& rep, int k) {
  CohomologyReport out;
  out.degree = k;
  if (k == 0) {
    out.dim_cochains = rep.dim;
    QMat z = kernel_basis(ce_differential(rep, 0));
    out.dim_cocycles = z.rows();
    out.dim_coboundaries = 0;
    out.dim_h = z.rows();
    out.representatives = std::move(z);
    out.coboundaries = Subspace(rep.dim);
    return out;
  }
  if (k != 1) throw InvalidInput("cohomology supports degrees 0 and 1 only");

  const std::size_t c1 = rep.algebra.dim * rep.dim;
  out.dim_cochains = c1;
  QMat z = kernel_basis(ce_differential(rep, 1));
  out.dim_cocycles = z.rows();
  Subspace b = Subspace::from_rows(ce_differential(rep, 0).transpose());
  out.dim_coboundaries = b.dim();
  out.dim_h = z.rows() - b.dim();

  QMat reduced(0, c1);
  for (std::size_t r = 0; r < z.rows(); ++r) {
    VecQ v = b.reduce(z.row(r));
    if (!vec_is_zero(v)) reduced.append_row(v);
  }
  auto e = reduced_row_echelon(reduced);
  QMat reps(e.rank, c1);
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < c1; ++c) reps(r, c) = e.rref(r, c);
  if (reps.rows() != out.dim_h) throw Error("cohomology bookkeeping mismatch");
  out.representatives = std::move(reps);
  out.coboundaries = std::move(b);
  return out;
}

/// Exact primitive of a 1-coboundary: theta with d theta = z, or nullopt,
/// which certifies that [z] != 0 in H^1.
inline std::optional<Cochain> coboundary_witness(const Representation& rep, const Cochain& z) {
  if (z.degree != 1) throw InvalidInput("coboundary_witness wants a 1-cochain");
  if (z.c.size() != rep.algebra.dim * rep.dim)
    throw DimensionMismatch("cochain does not fit the module");
  auto theta = solve_linear(ce_differential(rep, 0), z.c);
  if (!theta) return std::nullopt;
  return Cochain{0, std::move(*theta)};
}

}  // namespace liecheck
