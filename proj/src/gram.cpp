#include "fcgram/gram.hpp"

#include <cmath>

namespace fcgram {

namespace detail {

long double eval_poly_ld(const MatrixXld& coeffs, int l, long double y) {
  long double v = 0.0L;
  for (int m = static_cast<int>(coeffs.cols()) - 1; m >= 0; --m) v = v * y + coeffs(l, m);
  return v;
}

// p_l^(m) at y from the monomial coefficients, in long double.
long double eval_poly_deriv_ld(const MatrixXld& coeffs, int l, int m, long double y) {
  const int d = static_cast<int>(coeffs.cols());
  if (m >= d) return 0.0L;
  long double v = 0.0L;
  for (int k = d - 1; k >= m; --k) {
    long double fac = 1.0L;
    for (int i = k; i > k - m; --i) fac *= static_cast<long double>(i);
    v = v * y + fac * coeffs(l, k);
  }
  return v;
}

}  // namespace detail

GramBasis build_gram_basis(int d) {
  if (d < 2) throw BadBasisSize("need at least 2 Gram polynomials, got " + std::to_string(d));
  if (d > 12) throw BadBasisSize("basis size capped at 12, got " + std::to_string(d));

  GramBasis basis;
  basis.d = d;

  VectorXld y(d);
  for (int j = 0; j < d; ++j)
    y[j] = -1.0L + 2.0L * static_cast<long double>(j) / static_cast<long double>(d - 1);

  // Modified Gram-Schmidt on the monomial node vectors with one
  // reorthogonalization pass; monomial coefficients updated alongside.
  MatrixXld q = MatrixXld::Zero(d, d);      // (l, j) node values
  MatrixXld coef = MatrixXld::Zero(d, d);   // (l, m) monomial coefficients

  for (int l = 0; l < d; ++l) {
    VectorXld v(d);
    for (int j = 0; j < d; ++j) v[j] = std::pow(y[j], static_cast<long double>(l));
    VectorXld c = VectorXld::Zero(d);
    c[l] = 1.0L;
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < l; ++k) {
        const long double proj = q.row(k).transpose().dot(v);
        v -= proj * q.row(k).transpose();
        c -= proj * coef.row(k).transpose();
      }
    }
    const long double nrm = std::sqrt(v.dot(v));
    v /= nrm;
    c /= nrm;
    if (c[l] < 0.0L) { v = -v; c = -c; }
    q.row(l) = v.transpose();
    coef.row(l) = c.transpose();
  }

  basis.coeffs_ld = coef;
  basis.node_values_ld = q;
  basis.derivs_right_ld = MatrixXld::Zero(d, d);
  basis.derivs_left_ld = MatrixXld::Zero(d, d);
  for (int l = 0; l < d; ++l) {
    for (int m = 0; m < d; ++m) {
      basis.derivs_right_ld(l, m) = detail::eval_poly_deriv_ld(coef, l, m, 1.0L);
      basis.derivs_left_ld(l, m) = detail::eval_poly_deriv_ld(coef, l, m, -1.0L);
    }
  }

  basis.nodes = y.cast<double>();
  basis.coeffs = coef.cast<double>();
  basis.node_values = q.cast<double>();
  basis.derivs_right = basis.derivs_right_ld.cast<double>();
  basis.derivs_left = basis.derivs_left_ld.cast<double>();
  return basis;
}

double eval_gram(const GramBasis& basis, int l, double y) {
  if (l < 0 || l >= basis.d) throw IndexOutOfRange("gram index l=" + std::to_string(l));
  double v = 0.0;
  for (int m = basis.d - 1; m >= 0; --m) v = v * y + basis.coeffs(l, m);
  return v;
}

double eval_gram_deriv(const GramBasis& basis, int l, int m, double y) {
  if (l < 0 || l >= basis.d) throw IndexOutOfRange("gram index l=" + std::to_string(l));
  if (m < 0) throw IndexOutOfRange("derivative order m=" + std::to_string(m));
  if (m > l) return 0.0;
  return static_cast<double>(detail::eval_poly_deriv_ld(basis.coeffs_ld, l, m,
                                                        static_cast<long double>(y)));
}

double discrete_inner(const GramBasis& basis, const Eigen::VectorXd& samples, int l) {
  if (l < 0 || l >= basis.d) throw IndexOutOfRange("gram index l=" + std::to_string(l));
  if (samples.size() != basis.d)
    throw LengthMismatch("expected " + std::to_string(basis.d) + " samples, got " +
                         std::to_string(samples.size()));
  return basis.node_values.row(l).dot(samples);
}

}  // namespace fcgram
