#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tapsum/quadrature.hpp"
#include "tapsum/special.hpp"

using namespace tapsum;

TEST_CASE("riemann zeta reference values") {
  CHECK(riemann_zeta(2.0) == doctest::Approx(1.6449340668482264).epsilon(1e-12));
  CHECK(riemann_zeta(1.5) == doctest::Approx(2.6123753486854883).epsilon(1e-12));
  // analytic continuation below 1
  CHECK(riemann_zeta(0.75) == doctest::Approx(-3.4412853869452229).epsilon(1e-12));
}

TEST_CASE("riemann zeta domain errors") {
  CHECK_THROWS(riemann_zeta(1.0));
  CHECK_THROWS(riemann_zeta(0.5));
  CHECK_THROWS(riemann_zeta(-1.0));
}

TEST_CASE("scaled upper incomplete gamma, closed-form cases") {
  // Gamma(1, x) = e^{-x}, so the scaled value is exactly 1
  for (double x : {0.1, 1.0, 10.0, 100.0, 1000.0, 1e4})
    CHECK(exp_scaled_upper_gamma(1.0, x) == doctest::Approx(1.0).epsilon(1e-11));
  // Gamma(2, x) = (x + 1) e^{-x}
  for (double x : {0.5, 5.0, 50.0, 5000.0})
    CHECK(exp_scaled_upper_gamma(2.0, x) == doctest::Approx(x + 1.0).epsilon(1e-11));
}

TEST_CASE("scaled upper incomplete gamma, reference value") {
  CHECK(exp_scaled_upper_gamma(2.5, 0.5) ==
        doctest::Approx(2.1096667384675325).epsilon(1e-11));
  CHECK(exp_scaled_upper_gamma(2.5, 1000.0) ==
        doctest::Approx(31670.234471827973).epsilon(1e-9));
}

TEST_CASE("scaled upper incomplete gamma agrees with quadrature") {
  for (double a : {0.7, 1.5, 3.0}) {
    for (double x : {0.5, 2.0, 8.0}) {
      const double quad = integrate_to_inf(
          [a, x](double u) { return std::pow(x + u, a - 1.0) * std::exp(-u); }, 0.0);
      CHECK(exp_scaled_upper_gamma(a, x) == doctest::Approx(quad).epsilon(1e-9));
    }
  }
}

TEST_CASE("quadrature handles endpoint singularities") {
  // int_0^1 x^{-1/2} dx = 2
  const double v = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
  // int_1^inf x^{-2} dx = 1
  const double w = integrate_to_inf([](double x) { return 1.0 / (x * x); }, 1.0);
  CHECK(w == doctest::Approx(1.0).epsilon(1e-10));
}
