#pragma once

#include <complex>
#include <vector>

#include "tapsum/rng.hpp"

namespace tapsum {

// Fractional Brownian motion sampled at the given time points.
struct FbmSpec {
  double H = 0.5;
  std::vector<double> grid;  // sorted, positive, in (0,1] typically

  static FbmSpec uniform(double H, std::size_t points, double horizon = 1.0);
  void validate() const;
};

struct FbmPath {
  std::vector<double> values;      // one value per grid point
  bool cholesky_fallback = false;  // set when circulant embedding failed
};

double fbm_covariance(double s, double t, double H);
FbmPath sample_fbm(const FbmSpec& spec, RngStream& rng);

// Alpha-stable law with characteristic function
//   exp{ -t |u|^alpha (1 - i D sign u) }.
struct StableSpec {
  double alpha = 1.5;
  double D = 0.0;
  double t = 1.0;  // horizon / scale: Var-like parameter sigma^alpha

  // D = -tan(pi alpha / 2): the convention used by the source theorems.
  static StableSpec source_convention(double alpha, double t = 1.0);
  // D = +tan(pi alpha / 2) for 1 < alpha < 2 (skewness +1): the natural
  // limit of partial sums of positive heavy-tailed innovations.
  static StableSpec totally_right_skewed(double alpha, double t = 1.0);

  // Standard skewness parameter beta in [-1,1] implied by D.
  double skewness() const;
  void validate() const;
};

std::complex<double> stable_cf(const StableSpec& spec, double u);

// One draw by the Chambers-Mallows-Stuck transformation, scaled by t^{1/alpha}.
double sample_stable(const StableSpec& spec, RngStream& rng);

// Linear fractional stable motion via Riemann-sum discretization of the
// moving-average kernel (t-s)_+^{1-beta} - (-s)_+^{1-beta} against
// totally right-skewed stable increments of scale h^{1/alpha}.
struct LfsmSpec {
  double alpha = 1.5;
  double beta = 0.8;
  double h = 1.0 / 512.0;  // discretization step
  double M = 64.0;         // lower integration cutoff (integrate over [-M, t])

  // Chooses M so the kernel's alpha-norm below -M is under tail_frac of
  // the total (horizon = largest t to be sampled).
  static LfsmSpec make(double alpha, double beta, double h = 1.0 / 512.0,
                       double horizon = 1.0, double tail_frac = 1e-4);
  void validate() const;
};

// Path at the given (sorted, positive) time points.  beta = 1 degenerates
// to cumulative sums of the stable increments on (0, t].
std::vector<double> sample_lfsm(const LfsmSpec& spec,
                                const std::vector<double>& t_grid,
                                RngStream& rng);

}  // namespace tapsum
