#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tapsum/engine.hpp"

using namespace tapsum;

namespace {

// brute-force d_{n,j,t} straight from the definition
double d_brute(const FilterSpec& f, std::int64_t n, double t, std::int64_t j) {
  const std::int64_t m = static_cast<std::int64_t>(std::floor(n * t));
  double s = 0.0;
  for (std::int64_t k = 1; k <= m; ++k)
    if (k - j >= 0) s += coefficient(f, k - j);
  return s;
}

SimulationPlan small_plan(FilterSpec f, std::int64_t n, int reps,
                          Normalization norm, std::uint64_t seed = 7777) {
  return SimulationPlan::make(1.5, 0.2, std::move(f), n, {0.25, 0.5, 1.0}, reps,
                              16 * n, seed, norm);
}

}  // namespace

TEST_CASE("d coefficients match the defining sum") {
  for (const FilterSpec& f :
       {FilterSpec::power_law(0.75), FilterSpec::zero_sum(1.25),
        FilterSpec::explicit_finite({0.3, -0.2, 0.5})}) {
    const std::int64_t n = 24, J = 16;
    for (double t : {0.3, 0.7, 1.0}) {
      const DCoefficients d = d_coefficients(f, n, t, J);
      for (std::int64_t j = 1 - J; j <= d.n; ++j)
        CHECK(d(j) == doctest::Approx(d_brute(f, n, t, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("d coefficients for the identity filter are indicators") {
  const DCoefficients d = d_coefficients(FilterSpec::identity(), 10, 0.5, 4);
  for (std::int64_t j = -3; j <= 5; ++j)
    CHECK(d(j) == ((j >= 1 && j <= 5) ? 1.0 : 0.0));
  CHECK(d(100) == 0.0);  // out of range
}

TEST_CASE("sum of squared d matches the coefficient table") {
  const FilterSpec f = FilterSpec::zero_sum(1.25);
  const std::int64_t n = 64, J = 256;
  const DCoefficients d = d_coefficients(f, n, 1.0, J);
  double s = 0.0;
  for (double v : d.values) s += v * v;
  CHECK(sum_d_squared(f, n, J) == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("tail-corrected second moment dominates the truncated one") {
  for (const FilterSpec& f : {FilterSpec::power_law(0.75), FilterSpec::zero_sum(1.25)}) {
    const double plain = sum_d_squared(f, 512, 4096);
    const double corrected = sum_d_squared_tail_corrected(f, 512, 4096);
    CHECK(corrected > plain);
    // correction shrinks as the horizon grows
    const double corr_far = sum_d_squared_tail_corrected(f, 512, 1 << 16) -
                            sum_d_squared(f, 512, 1 << 16);
    CHECK(corr_far < corrected - plain);
  }
  const FilterSpec fin = FilterSpec::explicit_finite({1.0, 0.5});
  CHECK(sum_d_squared_tail_corrected(fin, 64, 32) ==
        doctest::Approx(sum_d_squared(fin, 64, 32)));
}

TEST_CASE("absolute power sums specialize to the squared sum") {
  const FilterSpec f = FilterSpec::power_law(1.5);
  CHECK(sum_abs_d_pow(f, 128, 1024, 2.0) ==
        doctest::Approx(sum_d_squared(f, 128, 1024)).epsilon(1e-12));
  CHECK(sum_abs_d_pow(f, 128, 1024, 3.0) > 0.0);
}

TEST_CASE("variance growth constants: frozen quadrature values") {
  CHECK(prop1_constant(Prop1Case::I, 0.75) ==
        doctest::Approx(13.984306956224638).epsilon(1e-9));
  CHECK(prop1_constant(Prop1Case::III, 1.25) ==
        doctest::Approx(2.3962804694711844).epsilon(1e-9));
  CHECK_THROWS(prop1_constant(Prop1Case::I, 1.2));
  CHECK_THROWS(prop1_constant(Prop1Case::III, 0.9));
  CHECK_THROWS(prop1_constant(Prop1Case::II, 1.5));  // needs the filter
  const FilterSpec f = FilterSpec::power_law(1.5);
  CHECK(prop1_constant(Prop1Case::II, f) ==
        doctest::Approx(filter_sum(f) * filter_sum(f)));
  // c_a scales the constant quadratically
  CHECK(prop1_constant(Prop1Case::I, FilterSpec::power_law(0.75, 2.0)) ==
        doctest::Approx(4.0 * 13.984306956224638).epsilon(1e-9));
}

TEST_CASE("variance_exact for the identity filter is n times Var xi") {
  SimulationPlan plan = small_plan(FilterSpec::identity(), 64, 1, Normalization::Raw);
  CHECK(variance_exact(plan) ==
        doctest::Approx(64.0 * centered_innovation_variance(plan.params)).epsilon(1e-12));
}

TEST_CASE("lyapunov ratio decays with n for the identity filter") {
  // iid case: L(3,n) = n^{-1/2} E|xi|^3 / (Var xi)^{3/2}, b fixed via gamma
  SimulationPlan p1 = small_plan(FilterSpec::identity(), 256, 1, Normalization::Raw);
  SimulationPlan p2 = small_plan(FilterSpec::identity(), 1024, 1, Normalization::Raw);
  const double l1 = lyapunov_ratio(p1), l2 = lyapunov_ratio(p2);
  CHECK(l1 > 0.0);
  CHECK(l2 < l1);
}

TEST_CASE("plan validation") {
  CHECK_THROWS(SimulationPlan::make(1.5, 0.2, FilterSpec::identity(), 64, {0.5, 1.0},
                                    0, 1024, 1, Normalization::Raw));  // replicates
  CHECK_THROWS(SimulationPlan::make(1.5, 0.2, FilterSpec::identity(), 64, {},
                                    10, 1024, 1, Normalization::Raw));  // empty grid
  CHECK_THROWS(SimulationPlan::make(1.5, 0.2, FilterSpec::identity(), 64, {0.5, 0.25},
                                    10, 1024, 1, Normalization::Raw));  // unsorted
  CHECK_THROWS(SimulationPlan::make(1.5, 0.2, FilterSpec::identity(), 64, {0.5, 1.5},
                                    10, 1024, 1, Normalization::Raw));  // t > 1
  // gamma = 0 gives b = 1, below the taper lower bound
  CHECK_THROWS(SimulationPlan::make(1.5, 0.0, FilterSpec::identity(), 64, {1.0},
                                    10, 1024, 1, Normalization::Raw));
}

TEST_CASE("plan stores b = n^gamma") {
  SimulationPlan plan = small_plan(FilterSpec::identity(), 4096, 1, Normalization::Raw);
  CHECK(plan.params.b == doctest::Approx(std::pow(4096.0, 0.2)).epsilon(1e-14));
}

TEST_CASE("parallel and reference paths agree, direct regime") {
  SimulationPlan plan = small_plan(FilterSpec::zero_sum(1.25), 96, 16,
                                   Normalization::Raw);
  plan.truncation_J = 128;  // n + J < 4096: direct convolution
  const PathEnsemble a = simulate(plan);
  const PathEnsemble b = simulate_reference(plan);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-9));
}

TEST_CASE("parallel and reference paths agree, FFT regime") {
  SimulationPlan plan = small_plan(FilterSpec::power_law(0.75), 512, 8,
                                   Normalization::Raw);
  const PathEnsemble a = simulate(plan);  // n + J = 8704 >= 4096: FFT path
  const PathEnsemble b = simulate_reference(plan);
  for (std::size_t i = 0; i < a.values.size(); ++i)
    CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-9));
}

TEST_CASE("simulation is deterministic in the plan") {
  SimulationPlan plan = small_plan(FilterSpec::power_law(1.5), 256, 12,
                                   Normalization::ExactStdDev);
  const PathEnsemble a = simulate(plan);
  const PathEnsemble b = simulate(plan);
  CHECK(a.values == b.values);
  CHECK(a.normalization_used == doctest::Approx(std::sqrt(variance_exact(plan))));
}

TEST_CASE("exact normalization brings the unit-time variance close to 1") {
  SimulationPlan plan = small_plan(FilterSpec::power_law(1.5), 512, 1500,
                                   Normalization::ExactStdDev, 31337);
  const PathEnsemble e = simulate(plan);
  const auto z = e.column(2);
  double m = 0.0, v = 0.0;
  for (double x : z) m += x;
  m /= static_cast<double>(z.size());
  for (double x : z) v += (x - m) * (x - m);
  v /= static_cast<double>(z.size() - 1);
  CHECK(v == doctest::Approx(1.0).epsilon(0.12));
}

TEST_CASE("theoretical-power normalization requires the exponent") {
  SimulationPlan plan = small_plan(FilterSpec::identity(), 128, 4,
                                   Normalization::TheoreticalPower);
  CHECK_THROWS(simulate(plan));
  plan.hurst = 0.5;
  const PathEnsemble e = simulate(plan);
  CHECK(e.normalization_used == doctest::Approx(std::pow(128.0, 0.5)));
}

TEST_CASE("coupled simulation shares draws and tracks the taper level") {
  // large gamma => huge b => no draw gets tapered, and the two paths differ
  // only by the deterministic centering shift [nt] * (mu_1(b) - alpha/(alpha-1))
  SimulationPlan plan = SimulationPlan::make(1.5, 2.0, FilterSpec::identity(), 256,
                                             {1.0}, 50, 256, 99, Normalization::Raw);
  auto [tapered, pareto] = simulate_coupled(plan);
  const double shift = 256.0 * (tp_moment_exact(plan.params, 1.0) - 3.0);
  for (std::size_t i = 0; i < tapered.values.size(); ++i)
    CHECK(pareto.values[i] - tapered.values[i] ==
          doctest::Approx(shift).epsilon(1e-9));
  CHECK(tapered.rows == 50);
  CHECK(pareto.cols == 1);
}
