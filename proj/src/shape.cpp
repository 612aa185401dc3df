#include "fcgram/shape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

namespace fcgram {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r*(n-k+i) divisible by i at each step
  }
  return r;
}

// Coefficients of B_d(s) = s^{d+2} * sum_i coef[i] s^i, reduced int64
// rationals converted once to long double.
std::vector<long double> reg_beta_coeffs(int d) {
  // 1/B(d+2,d+2) = (2d+3)! / ((d+1)!)^2 = C(2d+3, d+1) * (d+2)
  const std::int64_t inv_beta = binomial(2 * d + 3, d + 1) * (d + 2);
  std::vector<long double> coef(d + 2);
  for (int i = 0; i <= d + 1; ++i) {
    std::int64_t num = inv_beta * binomial(d + 1, i);
    std::int64_t den = d + 2 + i;
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    long double v = static_cast<long double>(num) / static_cast<long double>(den);
    coef[i] = (i % 2 == 0) ? v : -v;
  }
  return coef;
}

}  // namespace

template <typename Scalar>
Scalar reg_beta(int d, Scalar s) {
  if (d < 1 || d > 12) throw BadBasisSize("reg_beta supports 1 <= d <= 12");
  if (!(s >= Scalar(0) && s <= Scalar(1))) throw DomainError("reg_beta argument outside [0,1]");
  if (s > Scalar(0.5)) return Scalar(1) - reg_beta(d, Scalar(1) - s);
  static thread_local std::vector<long double> cache[13];
  if (cache[d].empty()) cache[d] = reg_beta_coeffs(d);
  const auto& coef = cache[d];
  long double acc = 0.0L;
  const long double sl = static_cast<long double>(s);
  for (int i = d + 1; i >= 0; --i) acc = acc * sl + coef[i];
  long double lead = 1.0L;
  for (int i = 0; i < d + 2; ++i) lead *= sl;
  return static_cast<Scalar>(lead * acc);
}

template double reg_beta<double>(int, double);
template long double reg_beta<long double>(int, long double);

template <typename Scalar>
Scalar hermite_two_point(int d, int m, Scalar x1, Scalar x2, Scalar x) {
  if (x1 == x2) throw DegenerateNodes("two-point Hermite nodes coincide");
  if (m < 0 || m > d - 1) throw IndexOutOfRange("hermite order m=" + std::to_string(m));
  const Scalar t = (x - x1) / (x2 - x1);
  Scalar sum = Scalar(0);
  for (int l = d - 1 - m; l >= 0; --l)
    sum = sum * t + Scalar(static_cast<double>(binomial(d + l - 1, d - 1)));
  Scalar mfac = Scalar(1);
  for (int i = 2; i <= m; ++i) mfac *= Scalar(i);
  Scalar shifted = Scalar(1);
  for (int i = 0; i < m; ++i) shifted *= (x - x1);
  Scalar tail = Scalar(1);
  const Scalar r = (x - x2) / (x1 - x2);
  for (int i = 0; i < d; ++i) tail *= r;
  return shifted * tail * sum / mfac;
}

template double hermite_two_point<double>(int, int, double, double, double);
template long double hermite_two_point<long double>(int, int, long double, long double,
                                                    long double);

ShapeFamily ShapeFamily::bump(double a, double r) {
  if (!(a > 0.0) || !(r > 0.0)) throw DomainError("bump parameters must be positive");
  ShapeFamily f;
  f.kind = ShapeKind::Bump;
  f.bump_a = a;
  f.bump_r = r;
  return f;
}

ShapeFamily ShapeFamily::double_exp(double r1, double r2) {
  if (!(0.0 <= r1 && r1 < r2 && r2 <= 1.0))
    throw DomainError("double-exp requires 0 <= r1 < r2 <= 1");
  ShapeFamily f;
  f.kind = ShapeKind::DoubleExp;
  f.dexp_r1 = r1;
  f.dexp_r2 = r2;
  return f;
}

ShapeFamily ShapeFamily::reg_beta(std::vector<BetaShapeParams> params) {
  for (const auto& p : params) {
    if (!(p.mu > 0.0 && p.mu < 1.0)) throw DomainError("beta shape mu outside (0,1)");
    if (!(p.sigma_tilde > 0.0 && p.sigma_tilde < 1.0))
      throw DomainError("beta shape sigma_tilde outside (0,1)");
  }
  ShapeFamily f;
  f.kind = ShapeKind::RegBeta;
  f.beta = std::move(params);
  return f;
}

ShapeFamily ShapeFamily::reg_beta_defaults(int d) {
  static const double sigma[5] = {0.5, 0.6, 0.4, 0.2, 0.1};
  static const double mu[5] = {1e-10, 1e-10, 1e-8, 1e-10, 1e-5};
  std::vector<BetaShapeParams> params(d);
  for (int l = 0; l < d; ++l) {
    const int i = std::min(l, 4);
    params[l] = {mu[i], sigma[i]};
  }
  return reg_beta(std::move(params));
}

std::string ShapeFamily::name() const {
  switch (kind) {
    case ShapeKind::Hermite: return "hermite";
    case ShapeKind::Bump: return "bump";
    case ShapeKind::DoubleExp: return "doubleexp";
    case ShapeKind::RegBeta: return "beta";
  }
  return "?";
}

ShapeFamily ShapeFamily::by_name(const std::string& name, int d) {
  if (name == "hermite") return hermite();
  if (name == "bump") return bump();
  if (name == "doubleexp") return double_exp();
  if (name == "beta") return reg_beta_defaults(d);
  throw DomainError("unknown shape family '" + name + "'");
}

namespace {

// exp(-a/t^r) with the limit value 0 at t = 0.
long double bump_phi(long double t, double a, double r) {
  if (t <= 0.0L) return 0.0L;
  return std::exp(-static_cast<long double>(a) / std::pow(t, static_cast<long double>(r)));
}

long double eta_bump(long double t, double a, double r) {
  if (t <= 0.0L) return 1.0L;
  if (t >= 1.0L) return 0.0L;
  const long double lo = bump_phi(t, a, r);
  const long double hi = bump_phi(1.0L - t, a, r);
  return hi / (lo + hi);
}

// exp(2 e^{-1/u} / (u-1)) with limits 1 at u=0 and 0 at u=1.
long double dexp_psi(long double u) {
  if (u <= 0.0L) return 1.0L;
  if (u >= 1.0L) return 0.0L;
  return std::exp(2.0L * std::exp(-1.0L / u) / (u - 1.0L));
}

long double eta_dexp(long double t, double r1, double r2) {
  if (t <= static_cast<long double>(r1)) return 1.0L;
  if (t >= static_cast<long double>(r2)) return 0.0L;
  return dexp_psi((t - static_cast<long double>(r1)) /
                  static_cast<long double>(r2 - r1));
}

long double eta_beta_two_stage(long double x, double mu, double sigma, long double b, int d) {
  if (x <= 1.0L) return 1.0L;
  if (x >= b) return 0.0L;
  const long double mul = static_cast<long double>(mu);
  const long double sig = static_cast<long double>(sigma);
  if (x <= sig) {
    const long double xi1 = (x - 1.0L) / (sig - 1.0L);
    return (1.0L - mul) * (1.0L - reg_beta<long double>(d, xi1)) + mul;
  }
  const long double xi2 = (x - sig) / (b - sig);
  return mul * (1.0L - reg_beta<long double>(d, xi2));
}

const BetaShapeParams& beta_params(const ShapeFamily& family, int l) {
  if (family.beta.empty() || l >= static_cast<int>(family.beta.size()))
    throw DomainError("beta shape parameters missing for l=" + std::to_string(l));
  return family.beta[l];
}

// Parametric-family eta^R in long double; t-clamping at the endpoints
// takes the limit values so the endpoint zeros are exact.
long double eta_right_ld(const ShapeFamily& family, const FcConfig& cfg, int l,
                         long double x) {
  const long double b = static_cast<long double>(cfg.b.num) / cfg.b.den;
  const long double t = (x - 1.0L) / (b - 1.0L);
  switch (family.kind) {
    case ShapeKind::Bump:
      return eta_bump(t, family.bump_a, family.bump_r);
    case ShapeKind::DoubleExp:
      return eta_dexp(t, family.dexp_r1, family.dexp_r2);
    case ShapeKind::RegBeta: {
      const auto& p = beta_params(family, l);
      const double sigma = 1.0 + p.sigma_tilde * (cfg.b.value() - 1.0);
      return eta_beta_two_stage(x, p.mu, sigma, b, cfg.d);
    }
    case ShapeKind::Hermite:
      throw DomainError("hermite eta has no parametric profile");
  }
  return 0.0L;
}

// Hermite blend sum_m (2/delta)^m p_l^(m)(1) p_m^{1,b}(x), long double.
long double hermite_blend_right_ld(const GramBasis& basis, const FcConfig& cfg, int l,
                                   long double x) {
  const long double b = static_cast<long double>(cfg.b.num) / cfg.b.den;
  const long double scale = 2.0L / static_cast<long double>(cfg.delta);
  long double acc = 0.0L;
  long double w = 1.0L;
  for (int m = 0; m <= l; ++m) {
    acc += w * basis.derivs_right_ld(l, m) * hermite_two_point<long double>(cfg.d, m, 1.0L, b, x);
    w *= scale;
  }
  return acc;
}

long double hermite_blend_left_ld(const GramBasis& basis, const FcConfig& cfg, int l,
                                  long double x) {
  const long double b = static_cast<long double>(cfg.b.num) / cfg.b.den;
  const long double scale = 2.0L / static_cast<long double>(cfg.delta);
  long double acc = 0.0L;
  long double w = 1.0L;
  for (int m = 0; m <= l; ++m) {
    acc += w * basis.derivs_left_ld(l, m) * hermite_two_point<long double>(cfg.d, m, b, 1.0L, x);
    w *= scale;
  }
  return acc;
}

long double phi_right_ld(const FcConfig& cfg, long double x) {
  return 2.0L * (x - 1.0L) / static_cast<long double>(cfg.delta) + 1.0L;
}

long double phi_left_ld(const FcConfig& cfg, long double x) {
  const long double b = static_cast<long double>(cfg.b.num) / cfg.b.den;
  return 2.0L * (x - b) / static_cast<long double>(cfg.delta) - 1.0L;
}

long double blend_value_ld(const ShapeFamily& family, const GramBasis& basis,
                           const FcConfig& cfg, int l, Side side, long double x) {
  if (family.kind == ShapeKind::Hermite) {
    return side == Side::Right ? hermite_blend_right_ld(basis, cfg, l, x)
                               : hermite_blend_left_ld(basis, cfg, l, x);
  }
  const long double b = static_cast<long double>(cfg.b.num) / cfg.b.den;
  if (side == Side::Right) {
    return detail::eval_poly_ld(basis.coeffs_ld, l, phi_right_ld(cfg, x)) *
           eta_right_ld(family, cfg, l, x);
  }
  return detail::eval_poly_ld(basis.coeffs_ld, l, phi_left_ld(cfg, x)) *
         eta_right_ld(family, cfg, l, b + 1.0L - x);
}

void check_domain(const FcConfig& cfg, double x) {
  if (x < 1.0 || x > cfg.b.value()) throw DomainError("shape argument outside [1,b]");
}

}  // namespace

double eta_right(const ShapeFamily& family, const GramBasis& basis, const FcConfig& cfg,
                 int l, double x) {
  if (l < 0 || l >= cfg.d) throw IndexOutOfRange("shape index l=" + std::to_string(l));
  check_domain(cfg, x);
  if (family.kind == ShapeKind::Hermite) {
    // endpoint values are the defined limits
    if (x == 1.0) return 1.0;
    if (x == cfg.b.value()) return 0.0;
    const double num = static_cast<double>(hermite_blend_right_ld(basis, cfg, l, x));
    const double den = eval_gram(basis, l, static_cast<double>(phi_right_ld(cfg, x)));
    return num / den;  // p_l has no zeros in [1, phi_R(b)]
  }
  return static_cast<double>(eta_right_ld(family, cfg, l, static_cast<long double>(x)));
}

double eta_left(const ShapeFamily& family, const GramBasis& basis, const FcConfig& cfg,
                int l, double x) {
  if (l < 0 || l >= cfg.d) throw IndexOutOfRange("shape index l=" + std::to_string(l));
  check_domain(cfg, x);
  if (family.kind == ShapeKind::Hermite) {
    if (x == cfg.b.value()) return 1.0;
    if (x == 1.0) return 0.0;
    const double num = static_cast<double>(hermite_blend_left_ld(basis, cfg, l, x));
    const double den = eval_gram(basis, l, static_cast<double>(phi_left_ld(cfg, x)));
    return num / den;
  }
  return eta_right(family, basis, cfg, l, cfg.b.value() + 1.0 - x);
}

BlendTable build_blend_table(const ShapeFamily& family, const GramBasis& basis,
                             const FcConfig& cfg) {
  if (basis.d != cfg.d) throw ConfigMismatch("basis size disagrees with config");
  BlendTable table;
  table.cfg = cfg;
  table.family = family;
  const auto c = cfg.c;
  table.right_ld = MatrixXld(cfg.d, c);
  table.left_ld = MatrixXld(cfg.d, c);
  for (std::int64_t j = 0; j < c; ++j) {
    const long double x =
        static_cast<long double>(cfg.n + 1 + j) / static_cast<long double>(cfg.n);
    for (int l = 0; l < cfg.d; ++l) {
      table.right_ld(l, j) = blend_value_ld(family, basis, cfg, l, Side::Right, x);
      table.left_ld(l, j) = blend_value_ld(family, basis, cfg, l, Side::Left, x);
    }
  }
  table.right_values = table.right_ld.cast<double>();
  table.left_values = table.left_ld.cast<double>();
  return table;
}

double blend_value(const ShapeFamily& family, const GramBasis& basis, const FcConfig& cfg,
                   int l, Side side, double x) {
  if (l < 0 || l >= cfg.d) throw IndexOutOfRange("shape index l=" + std::to_string(l));
  check_domain(cfg, x);
  return static_cast<double>(
      blend_value_ld(family, basis, cfg, l, side, static_cast<long double>(x)));
}

double continuation_sup_norm(const BlendTable& blend, const GramBasis& basis, int l,
                             Side side, int num_samples) {
  num_samples = std::max(num_samples, 1000);
  const double b = blend.cfg.b.value();
  double sup = 0.0;
  for (int i = 0; i <= num_samples; ++i) {
    const double x = 1.0 + (b - 1.0) * static_cast<double>(i) / num_samples;
    sup = std::max(sup, std::abs(blend_value(blend.family, basis, blend.cfg, l, side, x)));
  }
  return sup;
}

std::vector<BetaShapeParams> load_beta_params(const std::string& path, int d) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open shape config '" + path + "'");
  std::vector<BetaShapeParams> params(d);
  std::vector<bool> seen(d, false);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int l;
    double mu, st;
    if (!(ss >> l >> mu >> st)) throw DomainError("bad shape config line: " + line);
    if (l < 0 || l >= d) throw IndexOutOfRange("shape config l=" + std::to_string(l));
    params[l] = {mu, st};
    seen[l] = true;
  }
  for (int l = 0; l < d; ++l)
    if (!seen[l]) throw DomainError("shape config missing l=" + std::to_string(l));
  return params;
}

}  // namespace fcgram
