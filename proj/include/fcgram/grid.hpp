#pragma once

#include <Eigen/Core>

#include "fcgram/errors.hpp"
#include "fcgram/rational.hpp"

namespace fcgram {

// Discretization parameters for one run: n interior panels on [0,1]
// (spacing h = 1/n), period b > 1, d Gram polynomials.  Derived
// quantities are fixed at validation time; total_points = n*b is the
// DFT length used everywhere downstream.
struct FcConfig {
  int n = 0;
  Rational b{2, 1};
  int d = 0;
  double h = 0.0;           // 1/n
  double delta = 0.0;       // (d-1)/n, width of the boundary matching strip
  std::int64_t c = 0;       // extension points: (b-1)n - 1
  std::int64_t total_points = 0;  // n + c + 1 = n*b, always even

  bool operator==(const FcConfig& o) const {
    return n == o.n && b == o.b && d == o.d;
  }
  bool operator!=(const FcConfig& o) const { return !(*this == o); }
};

// Admissibility: n >= d-1, n*b integral and even.  d is capped at 12;
// basis construction in double degrades beyond that.
inline FcConfig validate_config(int n, Rational b, int d) {
  if (b.num <= b.den) throw BadPeriod("period b must exceed 1, got " + b.str());
  if (d < 2) throw BadBasisSize("need at least 2 Gram polynomials, got " + std::to_string(d));
  if (d > 12) throw BadBasisSize("basis size capped at 12, got " + std::to_string(d));
  std::int64_t nb = 0;
  if (n < 1 || !b.times_int(n, nb) || nb % 2 != 0 || n < d - 1) {
    throw NotInAdmissibleSet("n=" + std::to_string(n) + ", b=" + b.str() +
                             " is not admissible (need n >= d-1 and n*b an even integer)");
  }
  FcConfig cfg;
  cfg.n = n;
  cfg.b = b;
  cfg.d = d;
  cfg.h = 1.0 / static_cast<double>(n);
  cfg.delta = static_cast<double>(d - 1) / static_cast<double>(n);
  cfg.total_points = nb;
  cfg.c = nb - n - 1;
  return cfg;
}

// Equispaced grid on [0, b): x_j = j*b/(n+c+1).  Since n+c+1 = n*b the
// point reduces to the rational j/n; one correctly rounded division
// gives the same bits wherever the grid is regenerated.
inline Eigen::VectorXd main_grid(const FcConfig& cfg) {
  Eigen::VectorXd x(cfg.total_points);
  for (std::int64_t j = 0; j < cfg.total_points; ++j)
    x[j] = static_cast<double>(j) / static_cast<double>(cfg.n);
  return x;
}

inline double grid_point(const FcConfig& cfg, std::int64_t j) {
  return static_cast<double>(j) / static_cast<double>(cfg.n);
}

}  // namespace fcgram
