#pragma once

#include <Eigen/Core>

#include "fcgram/errors.hpp"

namespace fcgram {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Polynomials p_0..p_{d-1}, deg p_l = l, orthonormal under the discrete
// inner product sum_j p(y_j) q(y_j) on the d equispaced nodes
// y_j = -1 + 2j/(d-1).  Sign convention: positive leading coefficient.
//
// The *_ld members are the long double working copies from construction;
// the continuation path accumulates through them so that projection
// coefficients of data orthogonal to the basis vanish well below double
// round-off (the blending tables amplify any residual).
struct GramBasis {
  int d = 0;
  Eigen::VectorXd nodes;         // y_j
  Eigen::MatrixXd coeffs;        // (l, m): coefficient of y^m in p_l; 0 for m > l
  Eigen::MatrixXd node_values;   // (l, j): p_l(y_j)
  Eigen::MatrixXd derivs_right;  // (l, m): p_l^(m)(+1), m = 0..d-1
  Eigen::MatrixXd derivs_left;   // (l, m): p_l^(m)(-1)

  MatrixXld coeffs_ld;
  MatrixXld node_values_ld;
  MatrixXld derivs_right_ld;
  MatrixXld derivs_left_ld;
};

GramBasis build_gram_basis(int d);

// Horner evaluation of p_l at arbitrary y (valid outside [-1,1] too).
double eval_gram(const GramBasis& basis, int l, double y);

// m-fold analytic derivative of p_l at y; zero for m > l.
double eval_gram_deriv(const GramBasis& basis, int l, int m, double y);

// sum_j samples[j] * p_l(y_j); samples must have length d.
double discrete_inner(const GramBasis& basis, const Eigen::VectorXd& samples, int l);

namespace detail {
long double eval_poly_ld(const MatrixXld& coeffs, int l, long double y);
}

}  // namespace fcgram
