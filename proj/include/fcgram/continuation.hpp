#pragma once

#include <functional>
#include <utility>

#include <Eigen/Core>

#include "fcgram/gram.hpp"
#include "fcgram/grid.hpp"
#include "fcgram/shape.hpp"

namespace fcgram {

// f sampled at x_j = j*h, j = 0..n.  The analytic callable, when given,
// is kept for reference-grid error evaluation.
struct SampledFunction {
  Eigen::VectorXd values;
  std::function<double(double)> analytic;
};

SampledFunction sample_function(const std::function<double(double)>& f, const FcConfig& cfg);

// b-periodic data vector: interior samples verbatim, continuation values
// on the c extension points, plus the boundary projection coefficients.
struct ExtendedData {
  FcConfig cfg;
  Eigen::VectorXd samples;      // length n*b
  Eigen::VectorXd coeff_left;   // a_l^L
  Eigen::VectorXd coeff_right;  // a_l^R
};

// Projection of the d left-edge / right-edge grid samples onto the Gram
// basis: a_L[l] = sum_j f(j h) p_l(y_j), a_R[l] = sum_j f(1-(d-1-j)h) p_l(y_j).
std::pair<Eigen::VectorXd, Eigen::VectorXd> boundary_coeffs(const SampledFunction& f,
                                                            const GramBasis& basis,
                                                            const FcConfig& cfg);

ExtendedData build_extension(const SampledFunction& f, const BlendTable& blend,
                             const GramBasis& basis, const FcConfig& cfg);

namespace detail {
// Long double projections; the extension is accumulated through these so
// coefficients of data orthogonal to a basis row stay far below the
// round-off floor the blending tables would otherwise amplify.
std::pair<VectorXld, VectorXld> boundary_coeffs_ld(const Eigen::VectorXd& values,
                                                   const GramBasis& basis,
                                                   const FcConfig& cfg);
}

}  // namespace fcgram
