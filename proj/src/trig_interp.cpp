#include "fcgram/trig_interp.hpp"

#include <cmath>

#include "fcgram/fft.hpp"

namespace fcgram {

namespace {

using cd = std::complex<double>;

cd kahan_sum(const std::vector<cd>& terms) {
  cd sum(0.0, 0.0), comp(0.0, 0.0);
  for (const cd& t : terms) {
    const cd y = t - comp;
    const cd u = sum + y;
    comp = (u - sum) - y;
    sum = u;
  }
  return sum;
}

}  // namespace

TrigInterpolant dft_coeffs(const ExtendedData& data) {
  const std::int64_t nb = data.cfg.total_points;
  if (data.samples.size() != nb)
    throw LengthMismatch("extended data length " + std::to_string(data.samples.size()) +
                         " != n*b = " + std::to_string(nb));
  std::vector<cd> buf(nb);
  for (std::int64_t j = 0; j < nb; ++j) buf[j] = cd(data.samples[j], 0.0);
  fft(buf, false);

  TrigInterpolant t;
  t.period_b = data.cfg.b;
  t.num_modes = nb;
  t.coeffs.resize(nb);
  const double scale = 1.0 / static_cast<double>(nb);
  for (std::int64_t l = t.mode_min(); l <= t.mode_max(); ++l) {
    const std::int64_t k = (l + nb) % nb;  // standard transform ordering
    t.coeffs[l - t.mode_min()] = buf[k] * scale;
  }
  return t;
}

double eval_at(const TrigInterpolant& t, double x) {
  const double b = t.period_b.value();
  std::vector<cd> terms(t.num_modes);
  for (std::int64_t l = t.mode_min(); l <= t.mode_max(); ++l) {
    const double ang = 2.0 * M_PI * static_cast<double>(l) * x / b;
    terms[l - t.mode_min()] = t.coeff(l) * cd(std::cos(ang), std::sin(ang));
  }
  return kahan_sum(terms).real();
}

Eigen::VectorXd eval_uniform(const TrigInterpolant& t, std::int64_t M) {
  if (M < t.num_modes)
    throw DomainError("padded grid size " + std::to_string(M) + " below mode count");
  std::vector<cd> buf(M, cd(0.0, 0.0));
  for (std::int64_t l = t.mode_min(); l <= t.mode_max(); ++l)
    buf[(l + M) % M] = t.coeff(l);
  fft(buf, true);
  Eigen::VectorXd out(M);
  const double scale = static_cast<double>(M);  // undo the 1/M of the inverse
  for (std::int64_t m = 0; m < M; ++m) out[m] = buf[m].real() * scale;
  return out;
}

Eigen::VectorXd eval_interpolant(const TrigInterpolant& t, const Eigen::VectorXd& points) {
  const double b = t.period_b.value();
  for (Eigen::Index i = 0; i < points.size(); ++i)
    if (points[i] < 0.0 || points[i] >= b) throw DomainError("evaluation point outside [0,b)");

  // Uniform-refinement fast path: points[i] == i*b/M bitwise with nb | M.
  if (points.size() >= 2 && points[0] == 0.0) {
    const double dx = points[1] - points[0];
    if (dx > 0.0) {
      const std::int64_t M = static_cast<std::int64_t>(std::llround(b / dx));
      if (M >= t.num_modes && M % t.num_modes == 0 && points.size() <= M) {
        bool uniform = true;
        for (Eigen::Index i = 0; i < points.size() && uniform; ++i)
          uniform = points[i] == static_cast<double>(i) * b / static_cast<double>(M);
        if (uniform) {
          Eigen::VectorXd grid = eval_uniform(t, M);
          return grid.head(points.size());
        }
      }
    }
  }

  Eigen::VectorXd out(points.size());
  for (Eigen::Index i = 0; i < points.size(); ++i) out[i] = eval_at(t, points[i]);
  return out;
}

double lagrange_kernel_raw(std::int64_t j, double x, int n, std::int64_t num_points) {
  if (j < 0 || j >= num_points) throw IndexOutOfRange("kernel index j=" + std::to_string(j));
  const double u = static_cast<double>(j) - static_cast<double>(n) * x;
  const double v = M_PI * u / static_cast<double>(num_points);
  if (u == 0.0) return 1.0;
  if (std::sin(v) == 0.0) return 1.0;  // x lands on node j modulo the period
  const double s = std::sin(M_PI * u);
  if ((num_points - 1) % 2 != 0) {
    return s * (std::cos(v) / std::sin(v)) / static_cast<double>(num_points);
  }
  return s / std::sin(v) / static_cast<double>(num_points);
}

double lagrange_kernel(std::int64_t j, double x, const FcConfig& cfg) {
  return lagrange_kernel_raw(j, x, cfg.n, cfg.total_points);
}

double approx_error(const std::function<double(double)>& f, const TrigInterpolant& t,
                    std::int64_t N) {
  if (N < 2) throw DomainError("reference grid needs N >= 2");
  const Rational& b = t.period_b;
  std::int64_t M = 0;
  Eigen::VectorXd tvals;
  if (b.times_int(N, M) && M >= t.num_modes) {
    // z_j = j/N coincides with grid point m = j of the M = N*b synthesis
    tvals = eval_uniform(t, M);
  } else {
    tvals.resize(N + 1);
    for (std::int64_t j = 0; j <= N; ++j)
      tvals[j] = eval_at(t, static_cast<double>(j) / static_cast<double>(N));
  }
  double emax = 0.0, fmax = 0.0;
  for (std::int64_t j = 0; j <= N; ++j) {
    const double z = static_cast<double>(j) / static_cast<double>(N);
    const double fz = f(z);
    emax = std::max(emax, std::abs(tvals[j] - fz));
    fmax = std::max(fmax, std::abs(fz));
  }
  if (fmax == 0.0) throw ZeroFunction("reference function vanishes on the whole grid");
  return emax / fmax;
}

std::vector<ConvergenceRow> noc(std::vector<ConvergenceRow> rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n != 2 * rows[i - 1].n)
      throw NonDyadicSequence("n sequence must double at each step");
    rows[i].noc_n = std::log2(rows[i - 1].e_n / rows[i].e_n);
  }
  return rows;
}

}  // namespace fcgram
