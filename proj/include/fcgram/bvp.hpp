#pragma once

#include <complex>
#include <functional>
#include <string>

#include <Eigen/Core>

#include "fcgram/continuation.hpp"
#include "fcgram/grid.hpp"
#include "fcgram/shape.hpp"
#include "fcgram/trig_interp.hpp"

namespace fcgram {

// u'' + P u' + Q u + R = 0 on (0,1) with Robin data
// a0 u(0) - b0 u'(0) = c0 and a1 u(1) + b1 u'(1) = c1.  h1, h2 are two
// independent homogeneous solutions supplied analytically with their
// first derivatives; problem registries convert textbook forms into this
// sign convention and record the conversion in `description`.
struct BvpProblem {
  std::string name;
  std::string description;
  std::function<double(double)> P, Q, R;
  double a0 = 1.0, b0 = 0.0, c0 = 0.0;
  double a1 = 1.0, b1 = 0.0, c1 = 0.0;
  std::function<double(double)> h1, h2, dh1, dh2;
  std::function<double(double)> exact;  // optional, for error reporting
};

// Zero-padded Fourier coefficients of a continued coefficient function:
// c~_m for |m| <= n-1 from the transform, zero for n <= |m| <= 3n, and a
// lookup past 3n signals a padding bug.
struct CoeffLookup {
  int n = 0;
  Eigen::VectorXcd c;  // modes -(n-1)..(n-1)

  std::complex<double> operator()(std::int64_t m) const {
    if (m < -3 * static_cast<std::int64_t>(n) || m > 3 * static_cast<std::int64_t>(n))
      throw IndexOutOfRange("coefficient lookup at |m| > 3n");
    if (m <= -n || m >= n) return {0.0, 0.0};
    return c[m + n - 1];
  }
};

// Samples g on the main grid, continues it, and transforms; requires b = 2.
CoeffLookup continue_coefficient(const std::function<double(double)>& g, const FcConfig& cfg,
                                 const GramBasis& basis, const BlendTable& blend);

// Mode-collocation system: rows k = -2n..2n-1, columns l = -n..n-1, entry
// (pi*i*l) c~_{k-l}(P) + c~_{k-l}(Q), plus -(pi*k)^2 on the middle-block
// diagonal.
Eigen::MatrixXcd assemble_system(const CoeffLookup& P, const CoeffLookup& Q,
                                 const FcConfig& cfg);

// rhs_k = -c~_k(R) on the middle block, zero on the outer blocks.
Eigen::VectorXcd assemble_rhs(const CoeffLookup& R, const FcConfig& cfg);

struct LeastSquaresResult {
  Eigen::VectorXcd solution;
  double residual_norm = 0.0;
  double min_diag = 0.0;  // smallest |R_ii| of the equilibrated factor
};

// min ||A v - rhs||_2 by Householder QR on the column-equilibrated
// matrix (equilibration leaves the minimizer unchanged and keeps the
// factorization columnwise well scaled).  A is consumed in place.
LeastSquaresResult solve_least_squares(Eigen::MatrixXcd A, const Eigen::VectorXcd& rhs);

struct BvpSolution {
  FcConfig cfg;
  Eigen::VectorXcd v_coeffs;  // modes -n..n-1 of v_n
  double xi1 = 0.0, xi2 = 0.0;
  double residual_norm = 0.0;
  double bc_residual = 0.0;      // |BC0 mismatch| + |BC1 mismatch| of u_n
  double boundary_cond = 0.0;    // condition estimate of the 2x2 boundary matrix
};

// v_n and v_n' at the two endpoints, from the coefficients.
struct BoundaryValues {
  double v0, v1, dv0, dv1;
};
BoundaryValues boundary_values(const Eigen::VectorXcd& v, const FcConfig& cfg);

// Scalars xi so that u = v + xi1 h1 + xi2 h2 meets both Robin conditions.
std::pair<double, double> boundary_correction(const Eigen::VectorXcd& v, const FcConfig& cfg,
                                              const BvpProblem& prob, double* cond = nullptr);

BvpSolution solve_bvp(const BvpProblem& prob, const FcConfig& cfg, const ShapeFamily& family,
                      const GramBasis& basis);

// u_n at one point (direct mode summation plus the homogeneous part).
double eval_bvp_solution(const BvpSolution& sol, const BvpProblem& prob, double x);

// Relative sup error of u_n against prob.exact over z_j = j/N, j = 0..N.
double bvp_error(const BvpSolution& sol, const BvpProblem& prob, std::int64_t N);

}  // namespace fcgram
