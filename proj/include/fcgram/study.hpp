#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcgram/bvp.hpp"
#include "fcgram/shape.hpp"
#include "fcgram/trig_interp.hpp"

namespace fcgram {

using ParamMap = std::map<std::string, double>;

struct TestFunction {
  std::string name;
  std::string description;
  std::function<double(double)> f;
};

// Known ids: "smooth-osc", "abspow" (p), "xpow-sininv" (a1, a2; value 0
// at x = 0), "edgepow" (beta), "exp-neg-cos" (k), "recip" (eps).
TestFunction function_registry(const std::string& id, const ParamMap& params = {});

// Known ids: "coskx" (lambda, k) and "euler-log" (eps).
BvpProblem problem_registry(const std::string& id, const ParamMap& params = {});

struct StudySpec {
  enum class Kind { Approx, Bvp, ShapeDump };
  Kind kind = Kind::Approx;
  std::string target_id;
  ParamMap params;
  int d = 5;
  Rational b{2, 1};
  ShapeFamily family = ShapeFamily::reg_beta_defaults(5);
  std::vector<int> n_values;  // strictly increasing dyadic
  std::int64_t ref_grid = 131072;
  bool large = false;  // lifts the n <= 1024 BVP cap
};

// One e_n per n (approximation or BVP error), noc filled afterwards.
std::vector<ConvergenceRow> run_convergence(const StudySpec& spec);

// Deterministic CSV: "# key=value" header lines, then "n,e_n,noc_n" rows
// (noc blank on the first row).
std::string convergence_csv(const StudySpec& spec, const std::vector<ConvergenceRow>& rows);
void write_csv(const std::string& path, const std::string& content);

// Shape tabulation: x, eta_R, blend p_l^{R,e} at equispaced x in [1,b].
std::string shape_csv(const StudySpec& spec, int l, int samples);

struct PaperTableRow {
  int n;
  double e_n;
  std::optional<double> noc_n;
};

// Published convergence results used as regression fixtures.
struct PaperTable {
  std::string label;
  std::string family;   // "beta" (GenFC) or "hermite" (ModFC)
  std::string problem;  // registry id
  ParamMap params;
  std::vector<PaperTableRow> rows;
};

const std::vector<PaperTable>& reference_tables();

struct TableComparison {
  struct Row {
    int n;
    double e_n, e_ref;
    std::optional<double> noc_n, noc_ref;
    bool pass;                      // error-level agreement
    std::optional<bool> noc_within; // rate agreement, reported where comparable
  };
  std::vector<Row> rows;
  bool all_pass = true;
};

// Per-row pass iff |log10 e_n - log10 e_ref| <= tolerance_decades.  noc
// agreement (absolute tolerance 1.0) is reported alongside, but only
// before the reference data stagnates (three consecutive |noc| <= 0.5
// with errors within 3x, or a reference noc already below 1); step rates
// between independently rounded error levels are not a pass criterion.
TableComparison compare_to_table(const std::vector<ConvergenceRow>& rows,
                                 const PaperTable& table, double tolerance_decades);

// Index of the first stagnated reference row, or npos.
std::size_t stagnation_onset(const std::vector<PaperTableRow>& rows);

std::vector<int> parse_n_range(const std::string& text);

}  // namespace fcgram
