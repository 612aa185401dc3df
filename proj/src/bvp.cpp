#include "fcgram/bvp.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fcgram/fft.hpp"

namespace fcgram {

namespace {

using cd = std::complex<double>;

void require_b2(const FcConfig& cfg) {
  if (cfg.b != Rational(2, 1))
    throw ConfigMismatch("the spectral BVP solver fixes b = 2, got b = " + cfg.b.str());
}

}  // namespace

CoeffLookup continue_coefficient(const std::function<double(double)>& g, const FcConfig& cfg,
                                 const GramBasis& basis, const BlendTable& blend) {
  require_b2(cfg);
  const SampledFunction s = sample_function(g, cfg);
  const ExtendedData data = build_extension(s, blend, basis, cfg);
  const TrigInterpolant t = dft_coeffs(data);

  CoeffLookup lut;
  lut.n = cfg.n;
  lut.c.resize(2 * cfg.n - 1);
  for (std::int64_t m = -(cfg.n - 1); m <= cfg.n - 1; ++m) lut.c[m + cfg.n - 1] = t.coeff(m);
  return lut;
}

Eigen::MatrixXcd assemble_system(const CoeffLookup& P, const CoeffLookup& Q,
                                 const FcConfig& cfg) {
  require_b2(cfg);
  const std::int64_t n = cfg.n;
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(4 * n, 2 * n);
  for (std::int64_t l = -n; l < n; ++l) {
    const cd dfactor(0.0, M_PI * static_cast<double>(l));
    for (std::int64_t k = -2 * n; k < 2 * n; ++k) {
      const std::int64_t m = k - l;
      cd entry(0.0, 0.0);
      if (m > -n && m < n) entry = dfactor * P(m) + Q(m);
      if (k == l) entry += cd(-(M_PI * static_cast<double>(k)) * (M_PI * static_cast<double>(k)), 0.0);
      A(k + 2 * n, l + n) = entry;
    }
  }
  return A;
}

Eigen::VectorXcd assemble_rhs(const CoeffLookup& R, const FcConfig& cfg) {
  require_b2(cfg);
  const std::int64_t n = cfg.n;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(4 * n);
  for (std::int64_t k = -n; k < n; ++k) rhs[k + 2 * n] = -R(k);
  return rhs;
}

LeastSquaresResult solve_least_squares(Eigen::MatrixXcd A, const Eigen::VectorXcd& rhs) {
  const Eigen::Index m = A.rows(), nc = A.cols();
  if (rhs.size() != m) throw LengthMismatch("rhs length disagrees with matrix rows");

  Eigen::VectorXd colscale(nc);
  for (Eigen::Index j = 0; j < nc; ++j) {
    const double nrm = A.col(j).norm();
    colscale[j] = nrm > 0.0 ? nrm : 1.0;
    A.col(j) /= colscale[j];
  }

  Eigen::HouseholderQR<Eigen::Ref<Eigen::MatrixXcd>> qr(A);  // in place
  double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
  for (Eigen::Index j = 0; j < nc; ++j) {
    const double d = std::abs(qr.matrixQR()(j, j));
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  if (!(dmin > dmax * 1e-13))
    throw RankDeficient("equilibrated R diagonal spans [" + std::to_string(dmin) + ", " +
                        std::to_string(dmax) + "]");

  Eigen::VectorXcd qtb = rhs;
  qtb.applyOnTheLeft(qr.householderQ().adjoint());
  Eigen::VectorXcd y = qr.matrixQR()
                           .topRows(nc)
                           .template triangularView<Eigen::Upper>()
                           .solve(qtb.head(nc));

  LeastSquaresResult out;
  out.solution = y.cwiseQuotient(colscale.cast<cd>());
  out.residual_norm = qtb.tail(m - nc).norm();
  out.min_diag = dmin;
  return out;
}

BoundaryValues boundary_values(const Eigen::VectorXcd& v, const FcConfig& cfg) {
  const std::int64_t n = cfg.n;
  if (v.size() != 2 * n) throw LengthMismatch("mode vector must have length 2n");
  cd v0(0, 0), v1(0, 0), dv0(0, 0), dv1(0, 0);
  for (std::int64_t l = -n; l < n; ++l) {
    const cd vl = v[l + n];
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;  // e^{pi i l} = (-1)^l
    const cd der = cd(0.0, M_PI * static_cast<double>(l)) * vl;
    v0 += vl;
    v1 += sgn * vl;
    dv0 += der;
    dv1 += sgn * der;
  }
  return {v0.real(), v1.real(), dv0.real(), dv1.real()};
}

std::pair<double, double> boundary_correction(const Eigen::VectorXcd& v, const FcConfig& cfg,
                                              const BvpProblem& prob, double* cond) {
  const BoundaryValues bv = boundary_values(v, cfg);
  Eigen::Matrix2d M;
  M << prob.a0 * prob.h1(0.0) - prob.b0 * prob.dh1(0.0),
      prob.a0 * prob.h2(0.0) - prob.b0 * prob.dh2(0.0),
      prob.a1 * prob.h1(1.0) + prob.b1 * prob.dh1(1.0),
      prob.a1 * prob.h2(1.0) + prob.b1 * prob.dh2(1.0);
  Eigen::Vector2d r;
  r << prob.c0 - (prob.a0 * bv.v0 - prob.b0 * bv.dv0),
      prob.c1 - (prob.a1 * bv.v1 + prob.b1 * bv.dv1);
  const double det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  const double scale = M.cwiseAbs().maxCoeff();
  if (std::abs(det) <= 1e-14 * scale * scale)
    throw SingularBoundaryMatrix("homogeneous solutions cannot absorb the boundary data");
  if (cond) {
    const Eigen::Vector2d sv = M.jacobiSvd().singularValues();
    *cond = sv[0] / sv[1];
  }
  const Eigen::Vector2d xi = M.fullPivLu().solve(r);
  return {xi[0], xi[1]};
}

BvpSolution solve_bvp(const BvpProblem& prob, const FcConfig& cfg, const ShapeFamily& family,
                      const GramBasis& basis) {
  require_b2(cfg);
  const BlendTable blend = build_blend_table(family, basis, cfg);
  const CoeffLookup lutP = continue_coefficient(prob.P, cfg, basis, blend);
  const CoeffLookup lutQ = continue_coefficient(prob.Q, cfg, basis, blend);
  const CoeffLookup lutR = continue_coefficient(prob.R, cfg, basis, blend);

  Eigen::MatrixXcd A = assemble_system(lutP, lutQ, cfg);
  const Eigen::VectorXcd rhs = assemble_rhs(lutR, cfg);
  LeastSquaresResult ls = solve_least_squares(std::move(A), rhs);

  BvpSolution sol;
  sol.cfg = cfg;
  sol.v_coeffs = std::move(ls.solution);
  sol.residual_norm = ls.residual_norm;
  auto [xi1, xi2] = boundary_correction(sol.v_coeffs, cfg, prob, &sol.boundary_cond);
  sol.xi1 = xi1;
  sol.xi2 = xi2;

  const BoundaryValues bv = boundary_values(sol.v_coeffs, cfg);
  const double u0 = bv.v0 + xi1 * prob.h1(0.0) + xi2 * prob.h2(0.0);
  const double du0 = bv.dv0 + xi1 * prob.dh1(0.0) + xi2 * prob.dh2(0.0);
  const double u1 = bv.v1 + xi1 * prob.h1(1.0) + xi2 * prob.h2(1.0);
  const double du1 = bv.dv1 + xi1 * prob.dh1(1.0) + xi2 * prob.dh2(1.0);
  sol.bc_residual = std::abs(prob.a0 * u0 - prob.b0 * du0 - prob.c0) +
                    std::abs(prob.a1 * u1 + prob.b1 * du1 - prob.c1);
  return sol;
}

double eval_bvp_solution(const BvpSolution& sol, const BvpProblem& prob, double x) {
  const std::int64_t n = sol.cfg.n;
  cd acc(0.0, 0.0);
  for (std::int64_t l = -n; l < n; ++l) {
    const double ang = M_PI * static_cast<double>(l) * x;
    acc += sol.v_coeffs[l + n] * cd(std::cos(ang), std::sin(ang));
  }
  return acc.real() + sol.xi1 * prob.h1(x) + sol.xi2 * prob.h2(x);
}

double bvp_error(const BvpSolution& sol, const BvpProblem& prob, std::int64_t N) {
  if (!prob.exact) throw DomainError("problem '" + prob.name + "' has no exact solution");
  const std::int64_t n = sol.cfg.n;
  const std::int64_t M = 2 * N;  // b = 2
  std::vector<cd> buf(M, cd(0.0, 0.0));
  for (std::int64_t l = -n; l < n; ++l) buf[(l + M) % M] = sol.v_coeffs[l + n];
  fft(buf, true);
  double emax = 0.0, umax = 0.0;
  for (std::int64_t j = 0; j <= N; ++j) {
    const double z = static_cast<double>(j) / static_cast<double>(N);
    const double vn = buf[j].real() * static_cast<double>(M);
    const double un = vn + sol.xi1 * prob.h1(z) + sol.xi2 * prob.h2(z);
    const double ue = prob.exact(z);
    emax = std::max(emax, std::abs(un - ue));
    umax = std::max(umax, std::abs(ue));
  }
  if (umax == 0.0) throw ZeroFunction("exact solution vanishes on the reference grid");
  return emax / umax;
}

}  // namespace fcgram
