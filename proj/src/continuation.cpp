#include "fcgram/continuation.hpp"

#include <cmath>

namespace fcgram {

SampledFunction sample_function(const std::function<double(double)>& f, const FcConfig& cfg) {
  SampledFunction s;
  s.values.resize(cfg.n + 1);
  for (int j = 0; j <= cfg.n; ++j) s.values[j] = f(grid_point(cfg, j));
  if (!s.values.allFinite()) throw DomainError("function samples are not finite");
  s.analytic = f;
  return s;
}

namespace detail {

std::pair<VectorXld, VectorXld> boundary_coeffs_ld(const Eigen::VectorXd& values,
                                                   const GramBasis& basis,
                                                   const FcConfig& cfg) {
  const int d = cfg.d;
  if (values.size() != cfg.n + 1)
    throw LengthMismatch("expected " + std::to_string(cfg.n + 1) + " samples, got " +
                         std::to_string(values.size()));
  VectorXld a_left = VectorXld::Zero(d);
  VectorXld a_right = VectorXld::Zero(d);
  for (int l = 0; l < d; ++l) {
    long double al = 0.0L, ar = 0.0L;
    for (int j = 0; j < d; ++j) {
      al += static_cast<long double>(values[j]) * basis.node_values_ld(l, j);
      ar += static_cast<long double>(values[cfg.n - (d - 1) + j]) * basis.node_values_ld(l, j);
    }
    a_left[l] = al;
    a_right[l] = ar;
  }
  return {a_left, a_right};
}

}  // namespace detail

std::pair<Eigen::VectorXd, Eigen::VectorXd> boundary_coeffs(const SampledFunction& f,
                                                            const GramBasis& basis,
                                                            const FcConfig& cfg) {
  if (basis.d != cfg.d) throw ConfigMismatch("basis size disagrees with config");
  auto [al, ar] = detail::boundary_coeffs_ld(f.values, basis, cfg);
  return {al.cast<double>(), ar.cast<double>()};
}

ExtendedData build_extension(const SampledFunction& f, const BlendTable& blend,
                             const GramBasis& basis, const FcConfig& cfg) {
  if (blend.cfg != cfg) throw ConfigMismatch("blend table built for a different config");
  if (basis.d != cfg.d) throw ConfigMismatch("basis size disagrees with config");
  auto [al, ar] = detail::boundary_coeffs_ld(f.values, basis, cfg);

  ExtendedData data;
  data.cfg = cfg;
  data.samples.resize(cfg.total_points);
  data.samples.head(cfg.n + 1) = f.values;
  for (std::int64_t j = 0; j < cfg.c; ++j) {
    long double acc = 0.0L;
    for (int l = 0; l < cfg.d; ++l)
      acc += ar[l] * blend.right_ld(l, j) + al[l] * blend.left_ld(l, j);
    data.samples[cfg.n + 1 + j] = static_cast<double>(acc);
  }
  data.coeff_left = al.cast<double>();
  data.coeff_right = ar.cast<double>();
  return data;
}

}  // namespace fcgram
