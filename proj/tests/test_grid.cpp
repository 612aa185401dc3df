#include <doctest.h>

#include "fcgram/grid.hpp"

using namespace fcgram;

TEST_CASE("config derives the documented quantities") {
  const FcConfig cfg = validate_config(64, Rational(2, 1), 5);
  CHECK(cfg.h == 1.0 / 64);
  CHECK(cfg.delta == 4.0 / 64);
  CHECK(cfg.c == 63);
  CHECK(cfg.total_points == 128);
}

TEST_CASE("admissibility is decided in integer arithmetic") {
  CHECK_NOTHROW(validate_config(4, Rational(2, 1), 5));   // n = d-1 boundary holds
  CHECK_THROWS_AS(validate_config(3, Rational(2, 1), 5), NotInAdmissibleSet);
  CHECK_THROWS_AS(validate_config(63, Rational(3, 2), 4), NotInAdmissibleSet);  // nb not integral
  CHECK_THROWS_AS(validate_config(2, Rational(3, 2), 2), NotInAdmissibleSet);   // nb = 3 odd
  CHECK_THROWS_AS(validate_config(64, Rational(1, 1), 4), BadPeriod);
  CHECK_THROWS_AS(validate_config(64, Rational(1, 2), 4), BadPeriod);
  CHECK_THROWS_AS(validate_config(64, Rational(2, 1), 1), BadBasisSize);
  CHECK_THROWS_AS(validate_config(64, Rational(2, 1), 13), BadBasisSize);

  const FcConfig cfg = validate_config(64, Rational(3, 2), 4);
  CHECK(cfg.c == 31);  // (1/2)*64 - 1
  CHECK(cfg.total_points == 96);
}

TEST_CASE("main grid is equispaced with x_n = 1") {
  const FcConfig small = validate_config(4, Rational(2, 1), 3);
  const Eigen::VectorXd x = main_grid(small);
  REQUIRE(x.size() == 8);
  for (int j = 0; j < 8; ++j) CHECK(x[j] == 0.25 * j);

  const FcConfig cfg = validate_config(64, Rational(2, 1), 5);
  const Eigen::VectorXd y = main_grid(cfg);
  REQUIRE(y.size() == 128);
  CHECK(y[64] == 1.0);
  const double step = y[1] - y[0];
  for (int j = 1; j < y.size(); ++j)
    CHECK(std::abs((y[j] - y[j - 1]) - step) <= 4e-16);
}

TEST_CASE("interior and extension indices split at x = 1") {
  const FcConfig cfg = validate_config(12, Rational(3, 2), 4);
  const Eigen::VectorXd x = main_grid(cfg);
  for (int j = 0; j <= cfg.n; ++j) CHECK(x[j] <= 1.0);
  for (int j = cfg.n + 1; j < cfg.total_points; ++j) {
    CHECK(x[j] > 1.0);
    CHECK(x[j] < cfg.b.value());
  }
}
