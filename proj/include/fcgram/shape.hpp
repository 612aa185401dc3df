#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "fcgram/errors.hpp"
#include "fcgram/gram.hpp"
#include "fcgram/grid.hpp"

namespace fcgram {

enum class ShapeKind { Hermite, Bump, DoubleExp, RegBeta };

struct BetaShapeParams {
  double mu = 1e-10;          // intermediate level, in (0,1)
  double sigma_tilde = 0.5;   // join point as a fraction of (b-1), in (0,1)
};

// Tagged choice of blending profile.  Hermite carries no parameters and
// reproduces the two-point-Hermite continuation; the other three are
// tunable cutoff profiles on [1,b].
struct ShapeFamily {
  ShapeKind kind = ShapeKind::RegBeta;
  double bump_a = 1.0;
  double bump_r = 2.0;
  double dexp_r1 = 0.2;
  double dexp_r2 = 0.8;
  std::vector<BetaShapeParams> beta;  // one entry per l for RegBeta

  static ShapeFamily hermite() {
    ShapeFamily f;
    f.kind = ShapeKind::Hermite;
    return f;
  }
  static ShapeFamily bump(double a = 1.0, double r = 2.0);
  static ShapeFamily double_exp(double r1 = 0.2, double r2 = 0.8);
  static ShapeFamily reg_beta(std::vector<BetaShapeParams> params);
  // Stock parameters: sigma_tilde = {0.5, 0.6, 0.4, 0.2, 0.1},
  // mu = {1e-10, 1e-10, 1e-8, 1e-10, 1e-5}; rows past the fifth reuse the
  // last column.
  static ShapeFamily reg_beta_defaults(int d);

  std::string name() const;
  static ShapeFamily by_name(const std::string& name, int d);
};

// Regularized incomplete Beta profile B_d(s) on [0,1]: the degree-(2d+3)
// polynomial with B_d(0) = 0, B_d(1) = 1 and d+1 flat derivatives at both
// ends.  Coefficients are expanded in exact int64 rationals and converted
// once; s > 1/2 is evaluated through the reflection 1 - B_d(1-s) so the
// alternating sum never cancels catastrophically.
template <typename Scalar = double>
Scalar reg_beta(int d, Scalar s);

// Closed-form two-point Hermite basis polynomial p_m^{x1,x2}; its l-th
// derivative is delta_{ml} at x1 and 0 at x2 for l = 0..d-1.
template <typename Scalar = double>
Scalar hermite_two_point(int d, int m, Scalar x1, Scalar x2, Scalar x);

// Right shape function eta_l^R on [1,b]: 1 at x=1, 0 at x=b, flat to
// order d-1 at both ends.  basis/cfg are consulted only by the Hermite
// family (whose eta is the blend divided by the scaled Gram polynomial).
double eta_right(const ShapeFamily& family, const GramBasis& basis, const FcConfig& cfg,
                 int l, double x);

// Left counterpart; reflection eta_l^R(b+1-x) for the parametric
// families, the mirrored closed form for Hermite.
double eta_left(const ShapeFamily& family, const GramBasis& basis, const FcConfig& cfg,
                int l, double x);

// Blended continuations tabulated on the c extension grid points
// x_{n+1}..x_{n+c}: right_values(l, j) = p_l^{R,e}(x_{n+1+j}), and the
// left table likewise.  The long double tables are what build_extension
// accumulates through.
struct BlendTable {
  FcConfig cfg;
  ShapeFamily family;
  Eigen::MatrixXd right_values;
  Eigen::MatrixXd left_values;
  MatrixXld right_ld;
  MatrixXld left_ld;
};

BlendTable build_blend_table(const ShapeFamily& family, const GramBasis& basis,
                             const FcConfig& cfg);

enum class Side { Left, Right };

// p_l^{R,e} / p_l^{L,e} at arbitrary x in [1,b] (not restricted to the
// extension grid).
double blend_value(const ShapeFamily& family, const GramBasis& basis, const FcConfig& cfg,
                   int l, Side side, double x);

// max |p_l^{side,e}| over an equispaced refinement of [1,b] with at least
// 1000 points, recomputed from the family.
double continuation_sup_norm(const BlendTable& blend, const GramBasis& basis, int l,
                             Side side, int num_samples = 2001);

// Plain-text shape parameter file: one line per l, "ell mu sigma_tilde".
std::vector<BetaShapeParams> load_beta_params(const std::string& path, int d);

}  // namespace fcgram
