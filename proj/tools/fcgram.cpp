#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcgram/study.hpp"

namespace {

using namespace fcgram;

ParamMap parse_params(const std::vector<std::string>& kvs) {
  ParamMap out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw DomainError("parameter must look like key=value: " + kv);
    out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return out;
}

ShapeFamily resolve_family(const std::string& name, int d, const std::string& shape_config) {
  ShapeFamily family = ShapeFamily::by_name(name, d);
  if (!shape_config.empty()) {
    if (family.kind != ShapeKind::RegBeta)
      throw DomainError("--shape-config only applies to the beta family");
    family = ShapeFamily::reg_beta(load_beta_params(shape_config, d));
  }
  return family;
}

void emit(const StudySpec& spec, const std::vector<ConvergenceRow>& rows,
          const std::string& out_path) {
  const std::string csv = convergence_csv(spec, rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_csv(out_path, csv);
  }
}

int run_verify_invariants() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::printf("%-58s %s\n", name.c_str(), ok ? "pass" : "FAIL");
    if (!ok) ++failures;
  };

  for (int d = 2; d <= 7; ++d) {
    const GramBasis basis = build_gram_basis(d);
    double resid = 0.0;
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        const double ip = basis.node_values.row(k).dot(basis.node_values.row(l));
        resid = std::max(resid, std::abs(ip - (k == l ? 1.0 : 0.0)));
      }
    check("gram orthonormality d=" + std::to_string(d), resid <= 1e-10);
  }

  const FcConfig cfg = validate_config(32, Rational(2, 1), 5);
  const GramBasis basis = build_gram_basis(5);
  for (const auto& name : {"hermite", "bump", "doubleexp", "beta"}) {
    const ShapeFamily family = ShapeFamily::by_name(name, 5);
    bool ok = true;
    for (int l = 0; l < 5; ++l) {
      ok = ok && eta_right(family, basis, cfg, l, 1.0) == 1.0;
      ok = ok && eta_right(family, basis, cfg, l, 2.0) == 0.0;
    }
    check(std::string("shape endpoint values ") + name, ok);
  }

  const TestFunction tf = function_registry("smooth-osc");
  const FcConfig cfg64 = validate_config(64, Rational(2, 1), 5);
  const BlendTable blend = build_blend_table(ShapeFamily::reg_beta_defaults(5), basis, cfg64);
  const ExtendedData data =
      build_extension(sample_function(tf.f, cfg64), blend, basis, cfg64);
  const TrigInterpolant t = dft_coeffs(data);
  double interp = 0.0;
  const Eigen::VectorXd grid = main_grid(cfg64);
  for (std::int64_t j = 0; j < cfg64.total_points; ++j)
    interp = std::max(interp, std::abs(eval_at(t, grid[j]) - data.samples[j]));
  check("interpolation reproduces extended data",
        interp <= 1e-12 * data.samples.cwiseAbs().maxCoeff());

  return failures == 0 ? 0 : 1;
}

int run_verify_tables(bool large) {
  int failures = 0;
  const int n_max = large ? 4096 : 1024;
  for (const auto& table : reference_tables()) {
    StudySpec spec;
    spec.kind = StudySpec::Kind::Bvp;
    spec.target_id = table.problem;
    spec.params = table.params;
    spec.d = 5;
    spec.b = Rational(2, 1);
    spec.family = ShapeFamily::by_name(table.family, 5);
    spec.large = large;
    for (const auto& row : table.rows)
      if (row.n <= n_max) spec.n_values.push_back(row.n);
    const auto rows = run_convergence(spec);
    PaperTable trimmed = table;
    trimmed.rows.resize(rows.size());
    const TableComparison cmp = compare_to_table(rows, trimmed, 1.0);
    for (const auto& row : cmp.rows) {
      const char* noc_info = !row.noc_within.has_value() ? ""
                             : (*row.noc_within ? " noc-agrees" : " noc-differs");
      std::printf("%-28s n=%-5d e=%.3e ref=%.3e %s%s\n", table.label.c_str(), row.n, row.e_n,
                  row.e_ref, row.pass ? "pass" : "FAIL", noc_info);
      if (!row.pass) ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized FC-Gram periodic continuation toolkit"};
  app.require_subcommand(1);

  std::string function_id, problem_id, family_name = "beta", n_range, out_path, shape_config;
  std::string b_text = "2";
  std::vector<std::string> fparams, pparams;
  int d = 5, ell = 0, samples = 1000, shape_n = 0;
  std::int64_t ref_grid = 131072;
  bool large = false;

  auto* approx = app.add_subcommand("approx", "convergence study for a test function");
  approx->add_option("--function", function_id, "registry id")->required();
  approx->add_option("--fparam", fparams, "function parameter key=value");
  approx->add_option("--d", d, "number of Gram polynomials");
  approx->add_option("--b", b_text, "period as p/q");
  approx->add_option("--family", family_name, "hermite|bump|doubleexp|beta");
  approx->add_option("--shape-config", shape_config, "beta parameter file");
  approx->add_option("--n-range", n_range, "dyadic range, e.g. 2^6:2^12")->required();
  approx->add_option("--ref-grid", ref_grid, "reference grid size N");
  approx->add_option("--out", out_path, "output CSV path (stdout when omitted)");

  auto* bvp = app.add_subcommand("bvp", "convergence study for a boundary value problem");
  bvp->add_option("--problem", problem_id, "registry id")->required();
  bvp->add_option("--pparam", pparams, "problem parameter key=value");
  bvp->add_option("--d", d, "number of Gram polynomials");
  bvp->add_option("--family", family_name, "hermite|bump|doubleexp|beta");
  bvp->add_option("--shape-config", shape_config, "beta parameter file");
  bvp->add_option("--n-range", n_range, "dyadic range, e.g. 2^6:2^10")->required();
  bvp->add_option("--ref-grid", ref_grid, "reference grid size N");
  bvp->add_option("--out", out_path, "output CSV path (stdout when omitted)");
  bvp->add_flag("--large", large, "allow n beyond 2^10 (dense solves get expensive)");

  auto* shape = app.add_subcommand("shape", "tabulate a shape function and its blend");
  shape->add_option("--family", family_name, "hermite|bump|doubleexp|beta");
  shape->add_option("--shape-config", shape_config, "beta parameter file");
  shape->add_option("--d", d, "number of Gram polynomials");
  shape->add_option("--b", b_text, "period as p/q");
  shape->add_option("--samples", samples, "number of tabulation intervals");
  shape->add_option("--ell", ell, "basis index l")->required();
  shape->add_option("--n", shape_n, "grid refinement fixing delta (smallest admissible otherwise)");
  shape->add_option("--out", out_path, "output CSV path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "run fixture comparisons");
  std::string suite = "invariants";
  verify->add_option("--suite", suite, "paper-tables|invariants")->required();
  verify->add_flag("--large", large, "extend table verification to n=2^12");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(approx) || app.got_subcommand(bvp)) {
      StudySpec spec;
      spec.kind = app.got_subcommand(bvp) ? StudySpec::Kind::Bvp : StudySpec::Kind::Approx;
      spec.target_id = app.got_subcommand(bvp) ? problem_id : function_id;
      spec.params = parse_params(app.got_subcommand(bvp) ? pparams : fparams);
      spec.d = d;
      spec.b = app.got_subcommand(bvp) ? Rational(2, 1) : Rational::parse(b_text);
      spec.family = resolve_family(family_name, d, shape_config);
      spec.n_values = parse_n_range(n_range);
      spec.ref_grid = ref_grid;
      spec.large = large;
      emit(spec, run_convergence(spec), out_path);
      return 0;
    }
    if (app.got_subcommand(shape)) {
      StudySpec spec;
      spec.kind = StudySpec::Kind::ShapeDump;
      spec.d = d;
      spec.b = Rational::parse(b_text);
      spec.family = resolve_family(family_name, d, shape_config);
      if (shape_n > 0) spec.n_values.push_back(shape_n);
      const std::string csv = shape_csv(spec, ell, samples);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        write_csv(out_path, csv);
      }
      return 0;
    }
    if (app.got_subcommand(verify)) {
      if (suite == "invariants") return run_verify_invariants();
      if (suite == "paper-tables") return run_verify_tables(large);
      throw DomainError("unknown suite '" + suite + "'");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
