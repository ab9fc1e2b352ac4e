#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecheck/cohomology.hpp"
#include "liecheck/homogeneous.hpp"

namespace liecheck {

struct NotCocycle : Error {
  using Error::Error;
};

/// The three coefficient modules of the reconstruction constraints, built
/// from one split: A = dual(m) (x) h carries the unknown phi, B and C receive
/// delta(phi) and Q(phi).
struct ReconstructionContext {
  HomogeneousSplit split;
  Representation mod_a;  // dual(m) (x) h
  Representation mod_b;  // wedge2dual(m) (x) m
  Representation mod_c;  // wedge2dual(m) (x) h

  static ReconstructionContext from_split(HomogeneousSplit s) {
    ReconstructionContext ctx;
    ctx.mod_a = build_representation("dual(m)⊗h", s);
    ctx.mod_b = build_representation("wedge2dual(m)⊗m", s);
    ctx.mod_c = build_representation("wedge2dual(m)⊗h", s);
    ctx.split = std::move(s);
    return ctx;
  }

  std::size_t dim_h() const { return split.dim_h(); }
  std::size_t dim_m() const { return split.dim_m(); }
  std::size_t c1a() const { return dim_h() * mod_a.dim; }
  std::size_t c1b() const { return dim_h() * mod_b.dim; }
  std::size_t c1c() const { return dim_h() * mod_c.dim; }

  /// phi(x, u) in h coordinates, for phi given as a 1-cochain in mod_a and
  /// x, u arbitrary coordinate vectors.
  VecQ eval_phi(const VecQ& phi, const VecQ& x, const VecQ& u) const {
    const std::size_t hd = dim_h(), md = dim_m();
    if (phi.size() != c1a()) throw DimensionMismatch("phi does not live in C1(mod_a)");
    VecQ out(hd, Rational(0));
    for (std::size_t p = 0; p < hd; ++p) {
      if (x[p] == 0) continue;
      for (std::size_t q = 0; q < md; ++q) {
        if (u[q] == 0) continue;
        const Rational f = x[p] * u[q];
        for (std::size_t t = 0; t < hd; ++t) {
          const Rational& v = phi[p * (md * hd) + q * hd + t];
          if (v != 0) out[t] += f * v;
        }
      }
    }
    return out;
  }
};

/// delta(phi)(x)(u1,u2) = rho(phi(x,u1)) u2 - rho(phi(x,u2)) u1, the
/// isotropy action applied to the h-values of phi. Linear in phi.
inline Cochain delta_map(const ReconstructionContext& ctx, const Cochain& phi) {
  if (phi.degree != 1 || phi.c.size() != ctx.c1a())
    throw DimensionMismatch("delta_map wants a 1-cochain with values in dual(m) (x) h");
  const std::size_t hd = ctx.dim_h(), md = ctx.dim_m();
  const std::size_t pc = pair_count(md);
  VecQ out(ctx.c1b(), Rational(0));
  for (std::size_t p = 0; p < hd; ++p) {
    VecQ x(hd, Rational(0));
    x[p] = 1;
    for (const auto& [i, j] : pair_list(md)) {
      VecQ ui(md, Rational(0)), uj(md, Rational(0));
      ui[i] = 1, uj[j] = 1;
      VecQ a = ctx.split.isotropy.act(ctx.eval_phi(phi.c, x, ui)).apply(uj);
      VecQ b = ctx.split.isotropy.act(ctx.eval_phi(phi.c, x, uj)).apply(ui);
      const std::size_t base = p * (pc * md) + pair_index(md, i, j) * md;
      for (std::size_t w = 0; w < md; ++w) out[base + w] = a[w] - b[w];
    }
  }
  return {1, std::move(out)};
}

/// The bilinear part of Q: C(f,g)(x)(u1,u2) = f(g(x,u1),u2) - f(g(x,u2),u1).
inline Cochain q_bilinear(const ReconstructionContext& ctx, const Cochain& f, const Cochain& g) {
  if (f.c.size() != ctx.c1a() || g.c.size() != ctx.c1a())
    throw DimensionMismatch("q_bilinear wants 1-cochains in mod_a");
  const std::size_t hd = ctx.dim_h(), md = ctx.dim_m();
  const std::size_t pc = pair_count(md);
  VecQ out(ctx.c1c(), Rational(0));
  for (std::size_t p = 0; p < hd; ++p) {
    VecQ x(hd, Rational(0));
    x[p] = 1;
    for (const auto& [i, j] : pair_list(md)) {
      VecQ ui(md, Rational(0)), uj(md, Rational(0));
      ui[i] = 1, uj[j] = 1;
      VecQ t1 = ctx.eval_phi(f.c, ctx.eval_phi(g.c, x, ui), uj);
      VecQ t2 = ctx.eval_phi(f.c, ctx.eval_phi(g.c, x, uj), ui);
      const std::size_t base = p * (pc * hd) + pair_index(md, i, j) * hd;
      for (std::size_t t = 0; t < hd; ++t) out[base + t] = t1[t] - t2[t];
    }
  }
  return {1, std::move(out)};
}

/// The linear part of Q: T(f)(x)(u1,u2) = f(x, theta_m(u1,u2)).
inline Cochain q_theta_term(const ReconstructionContext& ctx, const Cochain& f) {
  if (f.c.size() != ctx.c1a()) throw DimensionMismatch("q_theta_term wants a 1-cochain in mod_a");
  const std::size_t hd = ctx.dim_h(), md = ctx.dim_m();
  const std::size_t pc = pair_count(md);
  VecQ out(ctx.c1c(), Rational(0));
  for (std::size_t p = 0; p < hd; ++p) {
    VecQ x(hd, Rational(0));
    x[p] = 1;
    for (std::size_t pr = 0; pr < pc; ++pr) {
      VecQ v = ctx.eval_phi(f.c, x, ctx.split.theta_m.row(pr));
      for (std::size_t t = 0; t < hd; ++t) out[p * (pc * hd) + pr * hd + t] = v[t];
    }
  }
  return {1, std::move(out)};
}

/// Q(phi)(x)(u1,u2) = phi(phi(x,u1),u2) - phi(phi(x,u2),u1) - phi(x, theta_m(u1,u2)):
/// quadratic in phi except for the theta_m term.
inline Cochain q_map(const ReconstructionContext& ctx, const Cochain& phi) {
  if (phi.degree != 1) throw DimensionMismatch("q_map wants a 1-cochain");
  Cochain out = q_bilinear(ctx, phi, phi);
  Cochain t = q_theta_term(ctx, phi);
  for (std::size_t r = 0; r < out.c.size(); ++r) out.c[r] -= t.c[r];
  return out;
}

/// Invariants of wedge2dual(m) (x) m: the space of admissible nu.
inline Subspace invariant_nu_basis(const ReconstructionContext& ctx) {
  return Subspace::from_rows(cohomology(ctx.mod_b, 0).representatives);
}

/// p_nu(x)(u1,u2) = phi(x, nu(u1,u2)); bilinear in (phi, nu). nu must be
/// invariant, otherwise its class would not be well defined.
inline Cochain pnu_map(const ReconstructionContext& ctx, const Cochain& phi, const VecQ& nu) {
  if (nu.size() != ctx.mod_b.dim) throw DimensionMismatch("nu does not live in mod_b");
  if (!vec_is_zero(ce_differential(ctx.mod_b, 0).apply(nu)))
    throw NotInvariant("nu is not an invariant of wedge2dual(m) (x) m");
  const std::size_t hd = ctx.dim_h(), md = ctx.dim_m();
  const std::size_t pc = pair_count(md);
  VecQ out(ctx.c1c(), Rational(0));
  for (std::size_t p = 0; p < hd; ++p) {
    VecQ x(hd, Rational(0));
    x[p] = 1;
    for (std::size_t pr = 0; pr < pc; ++pr) {
      VecQ nu_val(nu.begin() + pr * md, nu.begin() + (pr + 1) * md);
      VecQ v = ctx.eval_phi(phi.c, x, nu_val);
      for (std::size_t t = 0; t < hd; ++t) out[p * (pc * hd) + pr * hd + t] = v[t];
    }
  }
  return {1, std::move(out)};
}

struct PiSpace {
  Subspace p_span;        // span of p_nu over the invariant nu basis
  Subspace coboundaries;  // B^1(h, wedge2dual(m) (x) h)
  Subspace sum;           // their sum: the space Q(phi) is tested against
};

/// The subspace p_nu ranges over, together with the coboundaries that
/// realize the "mod B^1".
inline PiSpace pi_space(const ReconstructionContext& ctx, const Cochain& phi) {
  Subspace nus = invariant_nu_basis(ctx);
  QMat rows(0, ctx.c1c());
  for (std::size_t r = 0; r < nus.dim(); ++r)
    rows.append_row(pnu_map(ctx, phi, nus.basis_vector(r)).c);
  PiSpace out;
  out.p_span = Subspace::from_rows(rows);
  out.coboundaries = Subspace::from_rows(ce_differential(ctx.mod_c, 0).transpose());
  out.sum = Subspace::sum(out.p_span, out.coboundaries);
  return out;
}

struct Condition1Report {
  CohomologyReport h1_a;  // the cohomology carrying the unknown phi
  CohomologyReport h1_b;
  QMat induced_map;       // dim H1(mod_b) x dim H1(mod_a)
  Subspace kernel;        // of the induced map, in representative coordinates
  QMat kernel_cocycles;   // rows: cocycles in C1(mod_a) spanning the kernel classes
  std::vector<Cochain> theta_witnesses;  // d(theta) = delta(cocycle), one per kernel row
};

/// The map induced by delta on first cohomology, with its kernel and exact
/// theta_m witnesses. delta descends because it intertwines the module
/// actions; this is asserted on every representative.
inline Condition1Report condition1_kernel(const ReconstructionContext& ctx) {
  Condition1Report rep;
  rep.h1_a = cohomology(ctx.mod_a, 1);
  rep.h1_b = cohomology(ctx.mod_b, 1);
  const std::size_t da = rep.h1_a.dim_h, db = rep.h1_b.dim_h;

  Subspace reps_b = Subspace::from_rows(rep.h1_b.representatives);
  QMat d1b = ce_differential(ctx.mod_b, 1);
  rep.induced_map = QMat(db, da);
  std::vector<Cochain> deltas;
  for (std::size_t r = 0; r < da; ++r) {
    Cochain d = delta_map(ctx, {1, rep.h1_a.representatives.row(r)});
    if (!vec_is_zero(d1b.apply(d.c)))
      throw Error("delta of a cocycle failed to be closed (equivariance breakage)");
    auto split_coords = span_membership(reps_b, rep.h1_b.coboundaries, d.c);
    if (!split_coords) throw Error("a closed cochain escaped Z^1 bookkeeping");
    for (std::size_t k = 0; k < db; ++k) rep.induced_map(k, r) = split_coords->first[k];
    deltas.push_back(std::move(d));
  }

  rep.kernel = Subspace::from_rows(kernel_basis(rep.induced_map));
  rep.kernel_cocycles = QMat(0, ctx.c1a());
  for (std::size_t k = 0; k < rep.kernel.dim(); ++k) {
    VecQ coeff = rep.kernel.basis_vector(k);
    VecQ cocycle(ctx.c1a(), Rational(0));
    for (std::size_t r = 0; r < da; ++r)
      if (coeff[r] != 0)
        cocycle = vec_add(cocycle, vec_scale(coeff[r], rep.h1_a.representatives.row(r)));
    rep.kernel_cocycles.append_row(cocycle);
    auto witness = coboundary_witness(ctx.mod_b, delta_map(ctx, {1, cocycle}));
    if (!witness) throw Error("kernel class lost its coboundary witness");
    rep.theta_witnesses.push_back(std::move(*witness));
  }
  return rep;
}

struct Condition2Verdict {
  bool member = false;
  VecQ nu_coefficients;   // one per invariant nu basis element
  Cochain theta_witness;  // theta with Q(phi) = sum nu_coefficients p_nu + d(theta)
};

/// Decides Q(phi) ∈ span{p_nu} + B^1 for a fixed cocycle phi, returning the
/// exact decomposition when it exists.
inline Condition2Verdict condition2_check(const ReconstructionContext& ctx, const Cochain& phi) {
  if (phi.degree != 1 || phi.c.size() != ctx.c1a())
    throw DimensionMismatch("condition2_check wants a 1-cochain in mod_a");
  if (!vec_is_zero(ce_differential(ctx.mod_a, 1).apply(phi.c)))
    throw NotCocycle("phi is not a cocycle");

  Cochain q = q_map(ctx, phi);
  Subspace nus = invariant_nu_basis(ctx);
  QMat d0c = ce_differential(ctx.mod_c, 0);

  QMat system(ctx.c1c(), nus.dim() + ctx.mod_c.dim);
  std::vector<Cochain> pnus;
  for (std::size_t k = 0; k < nus.dim(); ++k) {
    Cochain p = pnu_map(ctx, phi, nus.basis_vector(k));
    for (std::size_t r = 0; r < ctx.c1c(); ++r) system(r, k) = p.c[r];
    pnus.push_back(std::move(p));
  }
  for (std::size_t r = 0; r < ctx.c1c(); ++r)
    for (std::size_t c = 0; c < ctx.mod_c.dim; ++c) system(r, nus.dim() + c) = d0c(r, c);

  Condition2Verdict verdict;
  auto sol = solve_linear(system, q.c);
  if (!sol) return verdict;
  verdict.member = true;
  verdict.nu_coefficients.assign(sol->begin(), sol->begin() + nus.dim());
  verdict.theta_witness = {0, VecQ(sol->begin() + nus.dim(), sol->end())};
  return verdict;
}

/// Exact residuals of the quadratic family Q(phi + sum s_i beta_i), reduced
/// modulo span{p_nu(phi)} + B^1: the coefficient of each monomial in s,
/// with no solving. beta runs over the coboundary basis of mod_a, the
/// representative freedom of the class [phi]. Writing Q(f) = C(f,f) - T(f)
/// with C bilinear and T linear, the monomial coefficients are exact:
///   1:        C(phi,phi) - T(phi)
///   s_k:      C(phi,b_k) + C(b_k,phi) - T(b_k)
///   s_k^2:    C(b_k,b_k)
///   s_k s_l:  C(b_k,b_l) + C(b_l,b_k)
struct Condition2Residuals {
  std::vector<std::string> monomials;  // "1", "s0", "s0^2", "s0*s1", ...
  QMat residuals;                      // one row per monomial, reduced mod pi_space
};

inline Condition2Residuals condition2_residual_dump(const ReconstructionContext& ctx,
                                                    const Cochain& phi) {
  PiSpace pi = pi_space(ctx, phi);
  Subspace b1a = Subspace::from_rows(ce_differential(ctx.mod_a, 0).transpose());
  const std::size_t nb = b1a.dim();
  std::vector<Cochain> betas;
  for (std::size_t k = 0; k < nb; ++k) betas.push_back({1, b1a.basis_vector(k)});

  Condition2Residuals out;
  out.residuals = QMat(0, ctx.c1c());
  out.monomials.push_back("1");
  out.residuals.append_row(pi.sum.reduce(q_map(ctx, phi).c));

  for (std::size_t k = 0; k < nb; ++k) {
    VecQ linear = vec_sub(vec_add(q_bilinear(ctx, phi, betas[k]).c,
                                  q_bilinear(ctx, betas[k], phi).c),
                          q_theta_term(ctx, betas[k]).c);
    out.monomials.push_back("s" + std::to_string(k));
    out.residuals.append_row(pi.sum.reduce(linear));
  }
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t l = k; l < nb; ++l) {
      VecQ coeff = (k == l) ? q_bilinear(ctx, betas[k], betas[k]).c
                            : vec_add(q_bilinear(ctx, betas[k], betas[l]).c,
                                      q_bilinear(ctx, betas[l], betas[k]).c);
      out.monomials.push_back(k == l ? "s" + std::to_string(k) + "^2"
                                     : "s" + std::to_string(k) + "*s" + std::to_string(l));
      out.residuals.append_row(pi.sum.reduce(coeff));
    }
  return out;
}

}  // namespace liecheck
