#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tapsum/regimes.hpp"

using namespace tapsum;

TEST_CASE("tapering mode splits at 1/alpha") {
  CHECK(tapering_mode({1.5, 0.75, 0.2, false}) == TaperingMode::Hard);
  CHECK(tapering_mode({1.5, 0.75, 1.0, false}) == TaperingMode::Soft);
  CHECK(tapering_mode({1.5, 0.75, 1.0 / 1.5, false}) == TaperingMode::Boundary);
  CHECK(tapering_mode({0.5, 0.75, 1.9, false}) == TaperingMode::Hard);  // 1/alpha = 2
}

TEST_CASE("positive-memory Gaussian regime with drifted exponent") {
  const RegimeVerdict v = classify({1.5, 0.75, 0.2, false});
  CHECK(v.theorem == Theorem::T1i);
  CHECK(v.limit == LimitKind::FBM);
  REQUIRE(v.hurst);
  CHECK(*v.hurst == doctest::Approx(0.8));
}

TEST_CASE("zero-memory cases on both sides of the taper threshold") {
  const RegimeVerdict gauss = classify({1.5, 1.5, 0.5, false});
  CHECK(gauss.theorem == Theorem::T1ii);
  CHECK(*gauss.hurst == doctest::Approx(0.625));

  const RegimeVerdict stab = classify({1.5, 2.0, 1.0, false});
  CHECK(stab.theorem == Theorem::T2ii);
  CHECK(stab.limit == LimitKind::StableLevy);
  CHECK(*stab.hurst == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("negative-memory soft tapering yields the fractional stable limit") {
  const RegimeVerdict v = classify({1.5, 1.25, 1.5, true});
  // C2 = 1/alpha + (beta-1)/(alpha beta - 1) = 2/3 + 0.25/0.875 = 0.95238
  CHECK(v.theorem == Theorem::T2iii);
  CHECK(v.limit == LimitKind::LFSM);
  CHECK(*v.hurst == doctest::Approx(1.0 / 1.5 + 1.0 - 1.25));
}

TEST_CASE("gap between the theorem bounds is reported with both constants") {
  const RegimeVerdict v = classify({1.2, 1.25, 1.0, true});
  CHECK(v.theorem == Theorem::UnknownGap);
  CHECK(v.limit == LimitKind::Unknown);
  REQUIRE(v.gap_bounds);
  CHECK(v.gap_bounds->first == doctest::Approx(0.41667).epsilon(1e-4));
  CHECK(v.gap_bounds->second == doctest::Approx(1.33333).epsilon(1e-4));
  CHECK(!v.hurst);
}

TEST_CASE("boundary gamma values do not claim a theorem") {
  // exactly at C1 for the positive-memory case
  const double alpha = 1.5, beta = 0.75;
  const double c1 = std::min(1.0 / alpha, (2.0 * beta - 1.0) / (2.0 - alpha));
  const RegimeVerdict v = classify({alpha, beta, c1, false});
  CHECK(v.theorem == Theorem::UnknownGap);
}

TEST_CASE("excluded parameter slices are unsupported") {
  CHECK(classify({1.5, 1.0, 0.2, false}).theorem == Theorem::Unsupported);  // beta = 1
  CHECK(classify({1.0, 0.75, 1.5, false}).theorem == Theorem::Unsupported);  // alpha = 1 soft
  // zero-sum with beta >= 3/2 has no Gaussian case and alpha beta > 1 fails too
  CHECK(classify({0.5, 1.6, 0.1, true}).theorem == Theorem::Unsupported);
}

TEST_CASE("alpha = 1 still classifies on the hard side") {
  const RegimeVerdict v = classify({1.0, 0.75, 0.2, false});
  CHECK(v.theorem == Theorem::T1i);
}

TEST_CASE("hurst shift against the untapered baseline") {
  // every Gaussian case drifts by gamma (2 - alpha) / 2
  CHECK(h_shift_check({1.5, 0.75, 0.2, false}) == doctest::Approx(0.2 * 0.25));
  CHECK(h_shift_check({1.5, 1.5, 0.5, false}) == doctest::Approx(0.5 * 0.25));
  CHECK_THROWS(hurst_exponent({1.2, 1.25, 1.0, true}));  // gap: no exponent
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(classify({2.0, 0.75, 0.2, false}));
  CHECK_THROWS(classify({0.0, 0.75, 0.2, false}));
  CHECK_THROWS(classify({1.5, 0.5, 0.2, false}));
  CHECK_THROWS(classify({1.5, 0.75, -0.1, false}));
}

TEST_CASE("names are stable identifiers") {
  CHECK(theorem_name(Theorem::T1iii) == "T1iii");
  CHECK(theorem_name(Theorem::UnknownGap) == "UnknownGap");
  CHECK(limit_name(LimitKind::StableLevy) == "StableLevy");
  CHECK(tapering_name(TaperingMode::Boundary) == "Boundary");
}
