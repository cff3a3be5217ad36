#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tapsum/filters.hpp"
#include "tapsum/special.hpp"

using namespace tapsum;

TEST_CASE("power-law coefficients and head convention") {
  const FilterSpec slow = FilterSpec::power_law(0.75, 2.0);
  CHECK(coefficient(slow, 1) == doctest::Approx(2.0));
  CHECK(coefficient(slow, 4) == doctest::Approx(2.0 * std::pow(4.0, -0.75)));
  // beta < 1: head absorbs the Euler-Maclaurin constant, -c_a zeta(beta)
  CHECK(coefficient(slow, 0) == doctest::Approx(-2.0 * riemann_zeta(0.75)));
  CHECK(coefficient(slow, 0) > 0.0);  // zeta(0.75) < 0

  const FilterSpec fast = FilterSpec::power_law(1.5);
  CHECK(coefficient(fast, 0) == doctest::Approx(1.0));
  CHECK(filter_sum(fast) == doctest::Approx(1.0 + riemann_zeta(1.5)).epsilon(1e-12));
}

TEST_CASE("slow power-law prefix sums track the integral without offset") {
  const FilterSpec f = FilterSpec::power_law(0.75);
  double prefix = 0.0;
  const std::int64_t N = 1 << 20;
  for (std::int64_t j = 0; j <= N; ++j) prefix += coefficient(f, j);
  const double integral = std::pow(static_cast<double>(N), 0.25) / 0.25;
  // with a_0 = c_a the ratio would be off by zeta(0.75)/integral ~ 2.7%
  CHECK(prefix / integral == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("zero-sum telescoping structure") {
  const FilterSpec f = FilterSpec::zero_sum(1.25);
  CHECK(coefficient(f, 0) == doctest::Approx(-1.0));
  CHECK(coefficient(f, 3) ==
        doctest::Approx(std::pow(3.0, -0.25) - std::pow(4.0, -0.25)));
  CHECK(filter_sum(f) == 0.0);
  // partial sums telescope to -(N+1)^{1-beta}
  double s = 0.0;
  for (std::int64_t j = 0; j <= 99; ++j) s += coefficient(f, j);
  CHECK(s == doctest::Approx(-std::pow(100.0, -0.25)).epsilon(1e-12));
  // decay constant: a_j ~ (beta-1) j^{-beta}
  CHECK(coefficient(f, 5000) ==
        doctest::Approx(0.25 * std::pow(5000.0, -1.25)).epsilon(1e-3));
}

TEST_CASE("explicit filters zero-extend") {
  const FilterSpec f = FilterSpec::explicit_finite({0.5, -0.25, 0.125});
  CHECK(coefficient(f, 0) == 0.5);
  CHECK(coefficient(f, 2) == 0.125);
  CHECK(coefficient(f, 3) == 0.0);
  CHECK(coefficient(f, 1000) == 0.0);
  CHECK(filter_sum(f) == doctest::Approx(0.375));
  CHECK(filter_sum(FilterSpec::identity()) == 1.0);
}

TEST_CASE("coefficient index must be nonnegative") {
  CHECK_THROWS(coefficient(FilterSpec::identity(), -1));
}

TEST_CASE("filter_sum diverges for slow power laws") {
  CHECK_THROWS(filter_sum(FilterSpec::power_law(0.75)));
}

TEST_CASE("validation rejects out-of-range shapes") {
  CHECK_THROWS(FilterSpec::power_law(0.4));
  CHECK_THROWS(FilterSpec::power_law(1.0));
  CHECK_THROWS(FilterSpec::power_law(1.5, 0.0));
  CHECK_THROWS(FilterSpec::zero_sum(0.9));
  CHECK_THROWS(FilterSpec::explicit_finite({}));
}

TEST_CASE("truncation horizon meets its own tail bound") {
  const FilterSpec f = FilterSpec::power_law(1.5);
  const std::int64_t J = truncation_horizon(f, 2.0, 1e-6);
  CHECK((J & (J - 1)) == 0);  // power of two
  double head = 0.0;
  for (std::int64_t j = 0; j <= J; ++j) head += std::pow(coefficient(f, j), 2.0);
  const double tail_bound = std::pow(static_cast<double>(J), -2.0) / 2.0;
  CHECK(tail_bound <= 1e-6 * head);
  // tighter tolerance never shrinks the horizon
  CHECK(truncation_horizon(f, 2.0, 1e-9) >= J);
}

TEST_CASE("truncation horizon for explicit filters covers the support") {
  const FilterSpec f = FilterSpec::explicit_finite({1.0, 2.0, 3.0, 4.0, 5.0});
  const std::int64_t J = truncation_horizon(f, 2.0, 1e-12);
  CHECK(J >= 5);
  CHECK((J & (J - 1)) == 0);
}

TEST_CASE("truncation horizon rejects divergent tails") {
  // p * beta <= 1: the p-norm of the coefficients diverges
  CHECK_THROWS(truncation_horizon(FilterSpec::power_law(0.75), 1.0, 1e-6));
  CHECK_THROWS(truncation_horizon(FilterSpec::power_law(1.5), 0.5, 1e-6));
}

TEST_CASE("dense coefficient vector matches pointwise evaluation") {
  const FilterSpec f = FilterSpec::zero_sum(1.4);
  const auto a = filter_coefficients(f, 64);
  REQUIRE(a.size() == 65);
  for (std::int64_t j = 0; j <= 64; ++j) CHECK(a[j] == coefficient(f, j));
}
