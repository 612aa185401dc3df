#include "fcgram/study.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fcgram {

namespace {

double param_or(const ParamMap& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

TestFunction function_registry(const std::string& id, const ParamMap& params) {
  TestFunction tf;
  tf.name = id;
  if (id == "smooth-osc") {
    tf.description = "exp(sin(65.5*pi*x - 27*pi) - cos(20.6*pi*x))";
    tf.f = [](double x) {
      return std::exp(std::sin(65.5 * M_PI * x - 27.0 * M_PI) - std::cos(20.6 * M_PI * x));
    };
  } else if (id == "abspow") {
    const double p = param_or(params, "p", 3.5);
    tf.description = "|x - 1/2|^" + fmt_short(p);
    tf.f = [p](double x) { return std::pow(std::abs(x - 0.5), p); };
  } else if (id == "xpow-sininv") {
    const double a1 = param_or(params, "a1", 1.7);
    const double a2 = param_or(params, "a2", 1.0);
    tf.description = "x^" + fmt_short(a1) + " * sin(x^-" + fmt_short(a2) + "), value 0 at x=0";
    tf.f = [a1, a2](double x) {
      if (x <= 0.0) return 0.0;  // removable singularity: defined limit value
      return std::pow(x, a1) * std::sin(std::pow(x, -a2));
    };
  } else if (id == "edgepow") {
    const double beta = param_or(params, "beta", 0.4);
    tf.description = "(1-x)^" + fmt_short(3.0 + beta);
    tf.f = [beta](double x) { return std::pow(1.0 - x, 3.0 + beta); };
  } else if (id == "exp-neg-cos") {
    const double k = param_or(params, "k", 200.0);
    tf.description = "exp(-cos(" + fmt_short(k) + "*x))";
    tf.f = [k](double x) { return std::exp(-std::cos(k * x)); };
  } else if (id == "recip") {
    const double eps = param_or(params, "eps", 0.01);
    tf.description = "1/(x + " + fmt_short(eps) + ")";
    tf.f = [eps](double x) { return 1.0 / (x + eps); };
  } else {
    throw UnknownFunction("no test function '" + id + "'");
  }
  return tf;
}

BvpProblem problem_registry(const std::string& id, const ParamMap& params) {
  BvpProblem prob;
  prob.name = id;
  if (id == "coskx") {
    const double lambda = param_or(params, "lambda", 0.1);
    const double k = param_or(params, "k", 100.0);
    prob.description = "-lambda u'' + u = cos(k x), u(0)=u(1)=0, as u'' + Qu + R = 0 with "
                       "Q = -1/lambda, R = cos(k x)/lambda; lambda=" +
                       fmt_short(lambda) + ", k=" + fmt_short(k);
    prob.P = [](double) { return 0.0; };
    prob.Q = [lambda](double) { return -1.0 / lambda; };
    prob.R = [lambda, k](double x) { return std::cos(k * x) / lambda; };
    prob.a0 = 1.0; prob.b0 = 0.0; prob.c0 = 0.0;
    prob.a1 = 1.0; prob.b1 = 0.0; prob.c1 = 0.0;
    const double s = 1.0 / std::sqrt(lambda);
    prob.h1 = [s](double x) { return std::exp(s * x); };
    prob.h2 = [s](double x) { return std::exp(-s * x); };
    prob.dh1 = [s](double x) { return s * std::exp(s * x); };
    prob.dh2 = [s](double x) { return -s * std::exp(-s * x); };
    // u = cos(kx)/(1 + lambda k^2) + A e^{sx} + B e^{-sx}, A and B from the
    // homogeneous Dirichlet data: A + B = -1/den, A e^s + B e^{-s} = -cos(k)/den.
    const double den = 1.0 + lambda * k * k;
    const double e1 = std::exp(s), e2 = std::exp(-s);
    const double det = e2 - e1;
    const double r0 = -1.0 / den, r1 = -std::cos(k) / den;
    const double A = (r0 * e2 - r1) / det;
    const double B = (r1 - r0 * e1) / det;
    prob.exact = [k, den, A, B, s](double x) {
      return std::cos(k * x) / den + A * std::exp(s * x) + B * std::exp(-s * x);
    };
  } else if (id == "euler-log") {
    const double eps = param_or(params, "eps", 0.01);
    prob.description = "(x+e)^2 u'' + 2(x+e) u' - 2u = sin(log(x+e)), u(0)=1, u(1)=2, as "
                       "u'' + Pu' + Qu + R = 0 with P = 2/(x+e), Q = -2/(x+e)^2, "
                       "R = -sin(log(x+e))/(x+e)^2; eps=" + fmt_short(eps);
    prob.P = [eps](double x) { return 2.0 / (x + eps); };
    prob.Q = [eps](double x) { return -2.0 / ((x + eps) * (x + eps)); };
    prob.R = [eps](double x) {
      return -std::sin(std::log(x + eps)) / ((x + eps) * (x + eps));
    };
    prob.a0 = 1.0; prob.b0 = 0.0; prob.c0 = 1.0;
    prob.a1 = 1.0; prob.b1 = 0.0; prob.c1 = 2.0;
    prob.h1 = [eps](double x) { return x + eps; };
    prob.h2 = [eps](double x) { return 1.0 / ((x + eps) * (x + eps)); };
    prob.dh1 = [](double) { return 1.0; };
    prob.dh2 = [eps](double x) { return -2.0 / ((x + eps) * (x + eps) * (x + eps)); };
    // u_p = -(3 sin(log(x+e)) + cos(log(x+e)))/10 plus C1 (x+e) + C2 (x+e)^-2.
    auto up = [eps](double x) {
      const double s = std::log(x + eps);
      return -(3.0 * std::sin(s) + std::cos(s)) / 10.0;
    };
    const double m00 = eps, m01 = 1.0 / (eps * eps);
    const double m10 = 1.0 + eps, m11 = 1.0 / ((1.0 + eps) * (1.0 + eps));
    const double det = m00 * m11 - m01 * m10;
    const double r0 = 1.0 - up(0.0), r1 = 2.0 - up(1.0);
    const double C1 = (r0 * m11 - m01 * r1) / det;
    const double C2 = (m00 * r1 - r0 * m10) / det;
    prob.exact = [eps, up, C1, C2](double x) {
      return up(x) + C1 * (x + eps) + C2 / ((x + eps) * (x + eps));
    };
  } else {
    throw UnknownProblem("no BVP '" + id + "'");
  }
  return prob;
}

std::vector<ConvergenceRow> run_convergence(const StudySpec& spec) {
  if (spec.n_values.empty()) throw DomainError("empty n range");
  for (std::size_t i = 1; i < spec.n_values.size(); ++i)
    if (spec.n_values[i] != 2 * spec.n_values[i - 1])
      throw NonDyadicSequence("n range must be dyadic");
  if (spec.kind == StudySpec::Kind::Bvp && !spec.large && spec.n_values.back() > 1024)
    throw DomainError("BVP sweeps above n=1024 are gated behind the large-run flag");

  std::vector<ConvergenceRow> rows;
  rows.reserve(spec.n_values.size());
  if (spec.kind == StudySpec::Kind::Approx) {
    const TestFunction tf = function_registry(spec.target_id, spec.params);
    const GramBasis basis = build_gram_basis(spec.d);
    for (const int n : spec.n_values) {
      const FcConfig cfg = validate_config(n, spec.b, spec.d);
      const BlendTable blend = build_blend_table(spec.family, basis, cfg);
      const SampledFunction f = sample_function(tf.f, cfg);
      const ExtendedData data = build_extension(f, blend, basis, cfg);
      const TrigInterpolant t = dft_coeffs(data);
      rows.push_back({n, approx_error(tf.f, t, spec.ref_grid), std::nullopt});
    }
  } else if (spec.kind == StudySpec::Kind::Bvp) {
    const BvpProblem prob = problem_registry(spec.target_id, spec.params);
    const GramBasis basis = build_gram_basis(spec.d);
    for (const int n : spec.n_values) {
      const FcConfig cfg = validate_config(n, spec.b, spec.d);
      const BvpSolution sol = solve_bvp(prob, cfg, spec.family, basis);
      rows.push_back({n, bvp_error(sol, prob, spec.ref_grid), std::nullopt});
    }
  } else {
    throw DomainError("run_convergence expects an approx or bvp spec");
  }
  return noc(std::move(rows));
}

namespace {

void append_family_header(std::ostringstream& out, const StudySpec& spec) {
  out << "# family=" << spec.family.name() << "\n";
  switch (spec.family.kind) {
    case ShapeKind::Bump:
      out << "# bump_a=" << fmt_short(spec.family.bump_a)
          << "\n# bump_r=" << fmt_short(spec.family.bump_r) << "\n";
      break;
    case ShapeKind::DoubleExp:
      out << "# dexp_r1=" << fmt_short(spec.family.dexp_r1)
          << "\n# dexp_r2=" << fmt_short(spec.family.dexp_r2) << "\n";
      break;
    case ShapeKind::RegBeta:
      for (std::size_t l = 0; l < spec.family.beta.size(); ++l)
        out << "# beta_l" << l << "=mu:" << fmt_short(spec.family.beta[l].mu)
            << ",sigma_tilde:" << fmt_short(spec.family.beta[l].sigma_tilde) << "\n";
      break;
    case ShapeKind::Hermite:
      break;
  }
}

}  // namespace

std::string convergence_csv(const StudySpec& spec, const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "# kind=" << (spec.kind == StudySpec::Kind::Bvp ? "bvp" : "approx") << "\n";
  out << "# target=" << spec.target_id << "\n";
  for (const auto& [key, value] : spec.params) out << "# " << key << "=" << fmt_short(value) << "\n";
  out << "# d=" << spec.d << "\n# b=" << spec.b.str() << "\n";
  append_family_header(out, spec);
  out << "# ref_grid=" << spec.ref_grid << "\n";
  out << "n,e_n,noc_n\n";
  for (const auto& row : rows) {
    out << row.n << "," << fmt(row.e_n) << ",";
    if (row.noc_n) out << fmt(*row.noc_n);
    out << "\n";
  }
  return out.str();
}

void write_csv(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + path + "'");
  f << content;
}

std::string shape_csv(const StudySpec& spec, int l, int samples) {
  const int n = spec.n_values.empty() ? 0 : spec.n_values.front();
  const FcConfig cfg = validate_config(
      n > 0 ? n : [&] {
        int cand = spec.d - 1;
        std::int64_t nb = 0;
        while (!(spec.b.times_int(cand, nb) && nb % 2 == 0 && cand >= spec.d - 1)) ++cand;
        return cand;
      }(),
      spec.b, spec.d);
  const GramBasis basis = build_gram_basis(spec.d);
  std::ostringstream out;
  out << "# kind=shape\n# d=" << spec.d << "\n# b=" << spec.b.str() << "\n# n=" << cfg.n
      << "\n# ell=" << l << "\n";
  append_family_header(out, spec);
  out << "x,eta_right,blend_right\n";
  const double b = spec.b.value();
  for (int i = 0; i <= samples; ++i) {
    const double x = 1.0 + (b - 1.0) * static_cast<double>(i) / samples;
    out << fmt(x) << "," << fmt(eta_right(spec.family, basis, cfg, l, x)) << ","
        << fmt(blend_value(spec.family, basis, cfg, l, Side::Right, x)) << "\n";
  }
  return out.str();
}

const std::vector<PaperTable>& reference_tables() {
  static const std::vector<PaperTable> tables = [] {
    std::vector<PaperTable> t;
    auto rows = [](std::initializer_list<PaperTableRow> list) {
      return std::vector<PaperTableRow>(list);
    };
    // Published convergence results for the two solver benchmarks, three
    // parameter values each, for both continuation families.
    t.push_back({"modfc-coskx-k100", "hermite", "coskx", {{"lambda", 0.1}, {"k", 100.0}},
                 rows({{64, 4.27e-2, {}}, {128, 1.18e-4, 8.50}, {256, 2.82e-6, 5.39},
                       {512, 2.69e-8, 6.71}, {1024, 3.00e-10, 6.49}, {2048, 3.28e-10, -0.13},
                       {4096, 3.92e-10, -0.26}})});
    t.push_back({"modfc-coskx-k200", "hermite", "coskx", {{"lambda", 0.1}, {"k", 200.0}},
                 rows({{64, 1.01e0, {}}, {128, 3.01e-2, 5.07}, {256, 2.38e-4, 6.98},
                       {512, 2.24e-6, 6.73}, {1024, 2.57e-8, 6.44}, {2048, 3.26e-8, -0.34},
                       {4096, 4.07e-8, -0.32}})});
    t.push_back({"modfc-coskx-k300", "hermite", "coskx", {{"lambda", 0.1}, {"k", 300.0}},
                 rows({{64, 7.50e0, {}}, {128, 2.56e-1, 4.87}, {256, 4.47e-3, 5.84},
                       {512, 3.63e-5, 6.94}, {1024, 3.24e-7, 6.81}, {2048, 2.93e-7, 0.14},
                       {4096, 3.23e-7, -0.14}})});
    t.push_back({"genfc-coskx-k100", "beta", "coskx", {{"lambda", 0.1}, {"k", 100.0}},
                 rows({{64, 4.48e-2, {}}, {128, 1.19e-4, 8.55}, {256, 2.82e-6, 5.41},
                       {512, 2.66e-8, 6.72}, {1024, 2.19e-10, 6.93}, {2048, 2.81e-12, 6.28},
                       {4096, 1.94e-12, 0.54}})});
    t.push_back({"genfc-coskx-k200", "beta", "coskx", {{"lambda", 0.1}, {"k", 200.0}},
                 rows({{64, 1.05e0, {}}, {128, 3.01e-2, 5.13}, {256, 2.38e-4, 6.98},
                       {512, 2.24e-6, 6.73}, {1024, 2.11e-8, 6.73}, {2048, 1.77e-10, 6.90},
                       {4096, 4.39e-11, 2.01}})});
    t.push_back({"genfc-coskx-k300", "beta", "coskx", {{"lambda", 0.1}, {"k", 300.0}},
                 rows({{64, 7.50e0, {}}, {128, 2.57e-1, 4.87}, {256, 4.47e-3, 5.84},
                       {512, 3.62e-5, 6.95}, {1024, 3.10e-7, 6.87}, {2048, 2.93e-9, 6.73},
                       {4096, 5.84e-10, 2.33}})});
    t.push_back({"modfc-euler-log-eps10", "hermite", "euler-log", {{"eps", 0.1}},
                 rows({{64, 5.82e-7, {}}, {128, 1.08e-8, 5.75}, {256, 1.38e-10, 6.29},
                       {512, 1.40e-12, 6.62}, {1024, 2.26e-14, 5.95}, {2048, 1.24e-14, 0.87},
                       {4096, 2.23e-14, -0.84}})});
    t.push_back({"modfc-euler-log-eps50", "hermite", "euler-log", {{"eps", 0.02}},
                 rows({{64, 6.31e-4, {}}, {128, 4.19e-5, 3.92}, {256, 1.37e-6, 4.93},
                       {512, 2.59e-8, 5.73}, {1024, 3.34e-10, 6.28}, {2048, 2.90e-10, 0.20},
                       {4096, 3.49e-10, -0.27}})});
    t.push_back({"modfc-euler-log-eps100", "hermite", "euler-log", {{"eps", 0.01}},
                 rows({{64, 2.08e-3, {}}, {128, 1.43e-4, 3.86}, {256, 2.23e-6, 6.00},
                       {512, 1.53e-7, 3.86}, {1024, 6.54e-9, 4.55}, {2048, 9.18e-9, -0.49},
                       {4096, 7.76e-9, 0.24}})});
    t.push_back({"genfc-euler-log-eps10", "beta", "euler-log", {{"eps", 0.1}},
                 rows({{64, 5.18e-7, {}}, {128, 1.13e-8, 5.52}, {256, 1.44e-10, 6.29},
                       {512, 1.46e-12, 6.62}, {1024, 1.31e-14, 6.80}, {2048, 9.99e-16, 3.71},
                       {4096, 7.77e-16, 0.36}})});
    t.push_back({"genfc-euler-log-eps50", "beta", "euler-log", {{"eps", 0.02}},
                 rows({{64, 7.38e-4, {}}, {128, 4.23e-5, 4.13}, {256, 1.36e-6, 4.96},
                       {512, 2.59e-8, 5.72}, {1024, 3.34e-10, 6.28}, {2048, 3.42e-12, 6.61},
                       {4096, 6.33e-13, 2.44}})});
    t.push_back({"genfc-euler-log-eps100", "beta", "euler-log", {{"eps", 0.01}},
                 rows({{64, 2.79e-3, {}}, {128, 1.43e-4, 4.29}, {256, 1.92e-6, 6.22},
                       {512, 1.56e-7, 3.62}, {1024, 6.48e-9, 4.59}, {2048, 1.17e-10, 5.80},
                       {4096, 8.35e-12, 3.80}})});
    return t;
  }();
  return tables;
}

std::size_t stagnation_onset(const std::vector<PaperTableRow>& rows) {
  // Stagnated at level E: three consecutive noc in [-0.5, 0.5] with the
  // errors within a factor 3 of E.
  for (std::size_t i = 0; i + 2 < rows.size(); ++i) {
    bool flat = true;
    for (std::size_t j = i; j < i + 3; ++j)
      flat = flat && rows[j].noc_n && std::abs(*rows[j].noc_n) <= 0.5;
    if (!flat) continue;
    const double level = rows[i].e_n;
    for (std::size_t j = i; j < i + 3; ++j)
      flat = flat && rows[j].e_n <= 3.0 * level && rows[j].e_n >= level / 3.0;
    if (flat) return i;
  }
  return static_cast<std::size_t>(-1);
}

TableComparison compare_to_table(const std::vector<ConvergenceRow>& rows,
                                 const PaperTable& table, double tolerance_decades) {
  TableComparison cmp;
  const std::size_t onset = stagnation_onset(table.rows);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i >= table.rows.size() || rows[i].n != table.rows[i].n)
      throw RowMismatch("computed rows do not line up with table '" + table.label + "'");
    const auto& ref = table.rows[i];
    TableComparison::Row out{rows[i].n,   rows[i].e_n, ref.e_n, rows[i].noc_n,
                             ref.noc_n,   true,        {}};
    out.pass = std::abs(std::log10(rows[i].e_n) - std::log10(ref.e_n)) <= tolerance_decades;
    // Reference rows with noc below 1 are already entering their round-off
    // plateau; rates are only comparable before that.
    const bool pre_stagnation = (onset == static_cast<std::size_t>(-1) || i < onset) &&
                                (!ref.noc_n || *ref.noc_n >= 1.0);
    if (pre_stagnation && ref.noc_n && out.noc_n)
      out.noc_within = std::abs(*out.noc_n - *ref.noc_n) <= 1.0;
    cmp.all_pass = cmp.all_pass && out.pass;
    cmp.rows.push_back(out);
  }
  return cmp;
}

std::vector<int> parse_n_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("n range must look like 2^a:2^b");
  auto parse_one = [](const std::string& s) -> int {
    if (s.rfind("2^", 0) == 0) return 1 << std::stoi(s.substr(2));
    return std::stoi(s);
  };
  const int lo = parse_one(text.substr(0, colon));
  const int hi = parse_one(text.substr(colon + 1));
  if (lo < 1 || hi < lo) throw DomainError("bad n range '" + text + "'");
  std::vector<int> out;
  for (int n = lo; n <= hi; n *= 2) out.push_back(n);
  return out;
}

}  // namespace fcgram
