#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tapsum/distributions.hpp"
#include "tapsum/filters.hpp"

namespace tapsum {

enum class Normalization { ExactStdDev, TheoreticalPower, Raw };

// Full description of one partial-sum experiment.  The taper level is
// tied to the grid length through b = n^gamma.
struct SimulationPlan {
  TaperedParetoParams params;
  double gamma = 0.0;
  FilterSpec filter;
  std::int64_t n = 0;
  std::vector<double> t_grid;
  int replicates = 0;
  std::int64_t truncation_J = 0;
  std::uint64_t seed = 0;
  Normalization normalization = Normalization::Raw;
  // required for TheoreticalPower; the CLI fills it from the classifier
  std::optional<double> hurst;

  static SimulationPlan make(double alpha, double gamma, FilterSpec filter,
                             std::int64_t n, std::vector<double> t_grid,
                             int replicates, std::int64_t truncation_J,
                             std::uint64_t seed, Normalization norm);
  void validate() const;
};

// replicate x time-grid matrix of (normalized) partial-sum values
struct PathEnsemble {
  std::vector<double> values;  // row-major, rows * cols
  std::size_t rows = 0, cols = 0;
  SimulationPlan plan;
  double normalization_used = 1.0;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  // all replicate values at grid column c
  std::vector<double> column(std::size_t c) const;
};

// d_{n,j,t} = sum_{k=1}^{[nt]} a_{k-j}, stored for j in [1-J, [nt]]
struct DCoefficients {
  std::int64_t n = 0;
  double t = 0.0;
  std::int64_t j_min = 0;
  std::vector<double> values;

  double operator()(std::int64_t j) const {
    const std::int64_t idx = j - j_min;
    if (idx < 0 || idx >= static_cast<std::int64_t>(values.size())) return 0.0;
    return values[idx];
  }
};

DCoefficients d_coefficients(const FilterSpec& f, std::int64_t n, double t,
                             std::int64_t J);

// sum_{j} d_{n,j,1}^2 over the truncated index range [1-J, n]
double sum_d_squared(const FilterSpec& f, std::int64_t n, std::int64_t J);

// As above plus the analytic integral estimate of the discarded j < 1-J
// tail (available for PowerLaw and ZeroSumTelescoping; exact 0 otherwise).
double sum_d_squared_tail_corrected(const FilterSpec& f, std::int64_t n,
                                    std::int64_t J);

// sum_j |d_{n,j,1}|^p over the truncated range
double sum_abs_d_pow(const FilterSpec& f, std::int64_t n, std::int64_t J,
                     double p);

enum class Prop1Case { I, II, III };

// Limit constant of sum d^2 / n^{3-2beta} (cases I, III) computed by
// quadrature over the closed-form inner integrals.  Case III carries the
// (beta-1)^2 scale of the telescoping construction.  Case II is
// filter-specific; use the FilterSpec overload.
double prop1_constant(Prop1Case c, double beta);
double prop1_constant(Prop1Case c, const FilterSpec& f);

// Var S_n(1) for the plan's truncated filter: sum d^2 * Var xi.
double variance_exact(const SimulationPlan& plan);

// Lyapunov CLT ratio L(3,n), exact coefficient sums and exact moments.
double lyapunov_ratio(const SimulationPlan& plan);

// Monte Carlo simulation of the partial-sum process on the plan's grid.
// Parallel over replicates; deterministic given the plan regardless of
// thread count (one RNG stream per replicate).
PathEnsemble simulate(const SimulationPlan& plan);

// Serial reference path: per-grid-point inner products against the exact
// d-coefficients.  Identical draws and (up to roundoff) identical values
// to simulate(); kept for testing and benchmarking.
PathEnsemble simulate_reference(const SimulationPlan& plan);

// Coupled ensembles driven by the same Pareto/exponential draws:
// first = tapered partial sums, second = untapered Pareto partial sums.
std::pair<PathEnsemble, PathEnsemble> simulate_coupled(const SimulationPlan& plan);

}  // namespace tapsum
