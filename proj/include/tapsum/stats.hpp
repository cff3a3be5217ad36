#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tapsum/engine.hpp"
#include "tapsum/limit_processes.hpp"

namespace tapsum {

// Least-squares fit of log statistic against log n.
struct ScalingFit {
  double exponent_hat = 0.0;
  double std_error = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // (log n, log statistic)
};

struct TestReport {
  std::string name;
  double value = 0.0;      // the test statistic, compared against threshold
  double threshold = 0.0;  // pass iff value <= threshold
  bool pass = false;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;  // provenance of the randomness, 0 if none
  std::string note;

  static TestReport make(std::string name, double value, double threshold,
                         std::size_t sample_size, std::uint64_t seed = 0,
                         std::string note = "") {
    TestReport r{std::move(name), value, threshold, value <= threshold,
                 sample_size, seed, std::move(note)};
    return r;
  }
};

// Slope of log statistic on log n; needs >= 4 distinct n and positive values.
ScalingFit scaling_regression(const std::vector<std::pair<double, double>>& points);

// Two-sided KS test against the standard normal at the 1% level
// (finite-sample adjusted statistic).  The sample must already be
// standardized; set standardize to do so by its own mean and stdev.
TestReport ks_normal(const std::vector<double>& sample, bool standardize = false);

// Hill estimator over the k largest positive sample values.
double hill_tail_index(const std::vector<double>& sample, std::size_t k);
std::size_t default_hill_k(std::size_t n);  // round(n^{2/3})

// Max over the grid of |empirical CF - stable_cf| after fitting a scale
// factor that matches |CF| at the smallest positive grid point.
double cf_distance(const std::vector<double>& sample, const StableSpec& spec,
                   const std::vector<double>& u_grid);

// Entrywise comparison of the ensemble's empirical covariance over its
// time grid with the fBm covariance at exponent H.  Requires ExactStdDev
// normalization.  Passes when every entry sits within 3 Monte Carlo
// standard errors plus the bias allowance.
TestReport covariance_match(const PathEnsemble& ensemble, double H,
                            double bias_allowance = 0.05);

// Empirical covariance of two columns-worth of replicate values.
double empirical_covariance(const std::vector<double>& x,
                            const std::vector<double>& y);

// Regression of the log normalized kappa-th coupling moment
// E|V_n(1) - S_n(1)|^kappa (per-plan normalization applied) on log n.
// A negative fitted slope certifies the coupling contraction.
ScalingFit coupling_decay(const std::vector<SimulationPlan>& plans, double kappa);

}  // namespace tapsum
