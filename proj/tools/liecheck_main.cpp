// liecheck: exact-arithmetic verification of the structure claims of a
// 9-dimensional Lie algebra model (and of user-supplied models): Jacobi
// identity, subalgebra closure, derivations, Chevalley-Eilenberg cohomology,
// invariant almost complex structures and metrics, Nijenhuis nondegeneracy,
// and the two cohomological reconstruction conditions.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "liecheck/algebra_file.hpp"
#include "liecheck/reconstruction.hpp"
#include "liecheck/verification.hpp"

using namespace liecheck;

namespace {

struct Output {
  std::string format = "text";
  std::string path;
  std::uint64_t seed = kDefaultSeed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", path, "write the report to a file instead of stdout");
    cmd->add_option("--seed", seed, "seed for the randomized property checks")
        ->capture_default_str();
  }

  void emit(const Json& json_body, const std::string& text_body) const {
    const std::string body = format == "json" ? json_body.dump(2) + "\n" : text_body;
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) throw ParseError("cannot write '" + path + "'");
      out << body;
    }
  }
};

Model model_from(const std::string& file) {
  return file.empty() ? builtin_model() : load_model(file);
}

HomogeneousSplit split_from(const Model& m) {
  if (!m.complement)
    throw ParseError("this command needs a model with a 'complement' block" +
                     std::string(m.subalgebra ? "" : " (and usually a 'subalgebra' block)"));
  QMat h = m.subalgebra ? *m.subalgebra : QMat(0, m.algebra.dim);
  return make_split(m.algebra, h, *m.complement);
}

std::string vec_text(const VecQ& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(v[i]) + "*" + labels[i];
  }
  return out.empty() ? "0" : out;
}

int cmd_verify(const std::string& file, const Output& out) {
  Model m = model_from(file);
  VerificationReport report = run_full_verification(m, out.seed);
  out.emit(report.to_json(), report.to_text());
  return report.all_passed() ? 0 : 1;
}

int cmd_jacobi(const std::string& file, const Output& out) {
  Model m = model_from(file);
  auto defects = jacobi_defect(m.algebra);
  Json j{{"model", m.name}, {"defect_count", defects.size()}};
  Json arr = Json::array();
  std::string text = "model: " + m.name + "\n";
  for (const auto& d : defects) {
    arr.push_back(Json{{"triple", {d.i, d.j, d.k}}, {"defect", detail::vec_to_json(d.defect)}});
    text += "defect at (" + std::to_string(d.i) + "," + std::to_string(d.j) + "," +
            std::to_string(d.k) + "): " + vec_text(d.defect, m.algebra.labels) + "\n";
  }
  j["defects"] = std::move(arr);
  text += defects.empty() ? "jacobi identity holds on all basis triples\n"
                          : "jacobi identity FAILS on " + std::to_string(defects.size()) +
                                " triple(s)\n";
  out.emit(j, text);
  return defects.empty() ? 0 : 1;
}

int cmd_subalgebra(const std::string& file, const Output& out) {
  Model m = model_from(file);
  if (!m.subalgebra) throw ParseError("model has no 'subalgebra' block");
  try {
    LieAlgebra sub = subalgebra_closure(Subalgebra(m.algebra, *m.subalgebra),
                                        default_labels(m.subalgebra->rows(), "s"));
    Json table = Json::array();
    std::string text = "model: " + m.name + "\nsubalgebra closes; induced brackets:\n";
    for (std::size_t i = 0; i < sub.dim; ++i)
      for (std::size_t k = i + 1; k < sub.dim; ++k) {
        VecQ br(sub.dim);
        for (std::size_t t = 0; t < sub.dim; ++t) br[t] = sub.at(i, k, t);
        if (vec_is_zero(br)) continue;
        table.push_back(Json{{"i", i}, {"j", k}, {"value", detail::vec_to_json(br)}});
        text += "  [s" + std::to_string(i) + ", s" + std::to_string(k) +
                "] = " + vec_text(br, sub.labels) + "\n";
      }
    out.emit(Json{{"model", m.name}, {"closed", true}, {"induced_brackets", table}}, text);
    return 0;
  } catch (const NotClosed& e) {
    Json j{{"model", m.name},
           {"closed", false},
           {"pair", {e.i, e.j}},
           {"residual", detail::vec_to_json(e.residual)}};
    out.emit(j, "model: " + m.name + "\nNOT closed: bracket of generators " +
                    std::to_string(e.i) + "," + std::to_string(e.j) +
                    " leaves the span; residual = " + vec_text(e.residual, m.algebra.labels) +
                    "\n");
    return 1;
  }
}

int cmd_derivations(const std::string& file, const Output& out) {
  Model m = model_from(file);
  DerivationAlgebra der = derivation_algebra(m.algebra);
  LieAlgebra outer = outer_derivation_algebra(m.algebra);
  std::size_t killing_rank = rank_of(killing_form(outer));
  Json j{{"model", m.name},
         {"dim_der", der.dim},
         {"dim_inner", der.inner_dim},
         {"dim_outer", outer.dim},
         {"outer_killing_rank", killing_rank}};
  out.emit(j, "model: " + m.name + "\ndim der = " + std::to_string(der.dim) +
                  ", inner = " + std::to_string(der.inner_dim) +
                  ", outer = " + std::to_string(outer.dim) +
                  ", outer killing rank = " + std::to_string(killing_rank) + "\n");
  return 0;
}

int cmd_cohomology(const std::string& file, int degree, const std::string& recipe,
                   const Output& out) {
  Model m = model_from(file);
  HomogeneousSplit split = split_from(m);
  Representation rep = build_representation(recipe, split);
  CohomologyReport r = cohomology(rep, degree);
  Json j{{"model", m.name},
         {"module", parse_module_expr(recipe).str()},
         {"module_dim", rep.dim},
         {"degree", r.degree},
         {"dim_cochains", r.dim_cochains},
         {"dim_cocycles", r.dim_cocycles},
         {"dim_coboundaries", r.dim_coboundaries},
         {"dim_h", r.dim_h},
         {"representatives", detail::matrix_to_json(r.representatives)}};
  out.emit(j, "model: " + m.name + "\nH^" + std::to_string(degree) + " of " +
                  parse_module_expr(recipe).str() + " (module dim " +
                  std::to_string(rep.dim) + "):\n  cochains " +
                  std::to_string(r.dim_cochains) + ", cocycles " +
                  std::to_string(r.dim_cocycles) + ", coboundaries " +
                  std::to_string(r.dim_coboundaries) + ", dim H = " +
                  std::to_string(r.dim_h) + "\n");
  return 0;
}

int cmd_acs(const std::string& file, const Output& out) {
  Model m = model_from(file);
  HomogeneousSplit split = split_from(m);
  AcsSolveOutcome solved = solve_invariant_acs(split);
  Json j{{"model", m.name},
         {"invariant_dim", solved.invariant_dim},
         {"status", solved.status == AcsStatus::Solved ? "solved"
                    : solved.status == AcsStatus::NoRationalSolution ? "no-rational-solution"
                                                                     : "unsupported"}};
  std::string text = "model: " + m.name + "\ninvariant endomorphisms: dimension " +
                     std::to_string(solved.invariant_dim) + "\n";
  Json sols = Json::array();
  for (const QMat& s : solved.solutions) sols.push_back(detail::matrix_to_json(s));
  j["solutions"] = std::move(sols);
  if (!solved.detail.empty()) j["detail"] = solved.detail;
  switch (solved.status) {
    case AcsStatus::Solved:
      text += "invariant almost complex structures: " + std::to_string(solved.solutions.size()) +
              " (closed under J -> -J)\n";
      break;
    case AcsStatus::NoRationalSolution:
      text += "no invariant almost complex structure: " + solved.detail + "\n";
      break;
    case AcsStatus::Unsupported:
      text += "not determined: " + solved.detail + "\n";
      break;
  }

  int exit_code = solved.status == AcsStatus::Unsupported ? 1 : 0;
  if (m.acs) {
    auto v = verify_acs_invariance(split, *m.acs);
    j["given_acs_invariant"] = v.invariant;
    text += v.invariant ? "supplied J: squares to -id and is invariant\n"
                        : "supplied J: NOT invariant (generator " + std::to_string(v.generator) +
                              ", basis vector " + std::to_string(v.vector) + ")\n";
    exit_code = v.invariant ? exit_code : 1;
  }
  out.emit(j, text);
  return exit_code;
}

int cmd_nijenhuis(const std::string& file, const Output& out) {
  Model m = model_from(file);
  HomogeneousSplit split = split_from(m);
  std::optional<QMat> j_used = m.acs;
  if (!j_used) {
    AcsSolveOutcome solved = solve_invariant_acs(split);
    if (solved.status == AcsStatus::Solved) j_used = solved.solutions[0];
  }
  if (!j_used) {
    out.emit(Json{{"model", m.name}, {"error", "no invariant almost complex structure"}},
             "model: " + m.name + "\nno invariant almost complex structure available\n");
    return 1;
  }
  NijenhuisForm n = nijenhuis_tensor(split, *j_used);
  auto report = nondegeneracy_report(split, *j_used, n);
  Json j{{"model", m.name},
         {"acs", detail::matrix_to_json(*j_used)},
         {"values", detail::matrix_to_json(n.values)},
         {"rank", report.rank},
         {"nondegenerate", report.nondegenerate},
         {"det_certificate", to_string(report.det_certificate)}};
  out.emit(j, "model: " + m.name + "\nnijenhuis rank = " + std::to_string(report.rank) +
                  ", nondegenerate = " + (report.nondegenerate ? "yes" : "no") +
                  ", det certificate = " + to_string(report.det_certificate) + "\n");
  return 0;
}

int cmd_theorem_b(const std::string& file, bool dump_residuals, const Output& out) {
  Model m = model_from(file);
  ReconstructionContext ctx = ReconstructionContext::from_split(split_from(m));

  Cochain phi = ctx.split.phi_cochain();
  bool delta_ok = delta_map(ctx, phi).c ==
                  ce_differential(ctx.mod_b, 0).apply(ctx.split.theta_m_cochain().c);
  bool q_ok = q_map(ctx, phi).c ==
              ce_differential(ctx.mod_c, 0).apply(ctx.split.theta_h_cochain().c);

  Condition1Report c1 = condition1_kernel(ctx);
  Condition2Verdict c2 = condition2_check(ctx, phi);

  Json classes = Json::array();
  for (std::size_t r = 0; r < c1.h1_a.dim_h; ++r) {
    Condition2Verdict v = condition2_check(ctx, {1, c1.h1_a.representatives.row(r)});
    classes.push_back(Json{{"class", r}, {"condition2_member", v.member}});
  }

  Json j{{"model", m.name},
         {"dim_h1_hom_m_h", c1.h1_a.dim_h},
         {"dim_h1_wedge2_m", c1.h1_b.dim_h},
         {"consistency", Json{{"delta_eq_d_theta_m", delta_ok}, {"q_eq_d_theta_h", q_ok}}},
         {"condition1", Json{{"kernel_dim", c1.kernel.dim()},
                             {"induced_map_rank", rank_of(c1.induced_map)}}},
         {"condition2_split_phi", c2.member},
         {"condition2_classes", std::move(classes)}};
  std::string text =
      "model: " + m.name + "\ndim H1(h, Hom(m,h)) = " + std::to_string(c1.h1_a.dim_h) +
      "\nconsistency: delta(phi) = d theta_m: " + (delta_ok ? "yes" : "NO") +
      ", Q(phi) = d theta_h: " + (q_ok ? "yes" : "NO") +
      "\ncondition (1): induced-map kernel dimension " + std::to_string(c1.kernel.dim()) +
      " of " + std::to_string(c1.h1_a.dim_h) +
      "\ncondition (2) for the split's phi: " + (c2.member ? "member" : "NOT a member") + "\n";

  if (dump_residuals) {
    Condition2Residuals res = condition2_residual_dump(ctx, phi);
    Json rows = Json::array();
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < res.monomials.size(); ++r) {
      if (!vec_is_zero(res.residuals.row(r))) ++nonzero;
      rows.push_back(Json{{"monomial", res.monomials[r]},
                          {"residual", detail::vec_to_json(res.residuals.row(r))}});
    }
    j["condition2_residuals"] = std::move(rows);
    text += "residual dump: " + std::to_string(res.monomials.size()) + " monomials, " +
            std::to_string(nonzero) + " with nonzero residual\n";
  }

  out.emit(j, text);
  return (delta_ok && q_ok && c2.member) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification workbench for Lie algebra models"};
  app.require_subcommand(1);

  std::string file;
  Output out;

  auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
  verify->add_option("file", file, "model file (defaults to the built-in model)");
  Output verify_out;
  verify_out.attach(verify);

  auto* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity");
  std::string jacobi_file;
  jacobi->add_option("file", jacobi_file, "model file")->required();
  Output jacobi_out;
  jacobi_out.attach(jacobi);

  auto* sub = app.add_subcommand("subalgebra", "check closure of the distinguished subalgebra");
  std::string sub_file;
  sub->add_option("file", sub_file, "model file")->required();
  Output sub_out;
  sub_out.attach(sub);

  auto* der = app.add_subcommand("derivations", "derivation algebra dimensions");
  std::string der_file;
  der->add_option("file", der_file, "model file")->required();
  Output der_out;
  der_out.attach(der);

  auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology of a module");
  std::string coh_file, coh_module = "dual(m)⊗h";
  int coh_degree = 1;
  coh->add_option("file", coh_file, "model file (needs subalgebra and complement)")->required();
  coh->add_option("--degree", coh_degree, "cochain degree")->check(CLI::IsMember({0, 1}));
  coh->add_option("--module", coh_module,
                  "module recipe: m | h | dual(expr) | expr⊗expr | wedge2dual(m)⊗atom")
      ->capture_default_str();
  Output coh_out;
  coh_out.attach(coh);

  auto* acs = app.add_subcommand("acs",
                                 "solve for invariant almost complex structures; verify a "
                                 "supplied one");
  std::string acs_file;
  acs->add_option("file", acs_file, "model file (needs subalgebra and complement)")->required();
  Output acs_out;
  acs_out.attach(acs);

  auto* nij = app.add_subcommand("nijenhuis", "Nijenhuis tensor and nondegeneracy certificate");
  std::string nij_file;
  nij->add_option("file", nij_file, "model file (needs subalgebra and complement)")->required();
  Output nij_out;
  nij_out.attach(nij);

  auto* thb = app.add_subcommand("theorem-b", "the two cohomological reconstruction conditions");
  std::string thb_file;
  bool thb_dump = false;
  thb->add_option("file", thb_file, "model file (needs subalgebra and complement)")->required();
  thb->add_flag("--dump-residuals", thb_dump,
                "also dump the exact residuals of the quadratic family over the class of phi");
  Output thb_out;
  thb_out.attach(thb);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(file, verify_out);
    if (jacobi->parsed()) return cmd_jacobi(jacobi_file, jacobi_out);
    if (sub->parsed()) return cmd_subalgebra(sub_file, sub_out);
    if (der->parsed()) return cmd_derivations(der_file, der_out);
    if (coh->parsed()) return cmd_cohomology(coh_file, coh_degree, coh_module, coh_out);
    if (acs->parsed()) return cmd_acs(acs_file, acs_out);
    if (nij->parsed()) return cmd_nijenhuis(nij_file, nij_out);
    if (thb->parsed()) return cmd_theorem_b(thb_file, thb_dump, thb_out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
