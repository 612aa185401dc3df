#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "fcgram/continuation.hpp"
#include "fcgram/grid.hpp"
#include "fcgram/rational.hpp"

namespace fcgram {

// Fourier coefficients c~_l of the b-periodic extended data, indexed
// l = -nb/2 .. nb/2-1 (asymmetric range; the Nyquist mode -nb/2 is kept
// unpaired and its imaginary synthesis contribution is absorbed by the
// final real-part projection).
struct TrigInterpolant {
  Rational period_b{2, 1};
  std::int64_t num_modes = 0;  // n*b, even
  Eigen::VectorXcd coeffs;     // storage order l = mode_min() + index

  std::int64_t mode_min() const { return -num_modes / 2; }
  std::int64_t mode_max() const { return num_modes / 2 - 1; }
  std::complex<double> coeff(std::int64_t l) const {
    if (l < mode_min() || l > mode_max())
      throw IndexOutOfRange("mode " + std::to_string(l) + " outside coefficient range");
    return coeffs[l - mode_min()];
  }
};

// Forward transform of the extended samples, normalized by 1/(nb).
TrigInterpolant dft_coeffs(const ExtendedData& data);

// Re( sum_l c~_l e^{2*pi*i*l*x/b} ) at one point, compensated summation.
double eval_at(const TrigInterpolant& t, double x);

// Values at the uniform grid x_m = m*b/M, m = 0..M-1, via zero-padded
// inverse transform; requires M >= num_modes.
Eigen::VectorXd eval_uniform(const TrigInterpolant& t, std::int64_t M);

// Point-list evaluation: uses the padded-transform path when the points
// form a uniform refinement x_i = i*b/M with num_modes | M, otherwise
// direct summation.
Eigen::VectorXd eval_interpolant(const TrigInterpolant& t, const Eigen::VectorXd& points);

// Closed-form Lagrange kernel on num_points equispaced nodes spanning
// [0,b) with x_j = j*b/num_points and n = num_points/b; the cot branch
// applies when num_points-1 is odd, the csc branch when it is even.
double lagrange_kernel_raw(std::int64_t j, double x, int n, std::int64_t num_points);
double lagrange_kernel(std::int64_t j, double x, const FcConfig& cfg);

// Relative sup error max_j |t(z_j) - f(z_j)| / max_j |f(z_j)| over
// z_j = j/N, j = 0..N (both endpoints included).
double approx_error(const std::function<double(double)>& f, const TrigInterpolant& t,
                    std::int64_t N);

struct ConvergenceRow {
  int n = 0;
  double e_n = 0.0;
  std::optional<double> noc_n;
};

// Fills noc_n = log2(e_{n/2}/e_n) for every row after the first; the n
// sequence must double at each step.
std::vector<ConvergenceRow> noc(std::vector<ConvergenceRow> rows);

}  // namespace fcgram
