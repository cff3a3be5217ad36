#pragma once

#include "tapsum/rng.hpp"

namespace tapsum {

// Tapered Pareto innovation law: density alpha*x^{-alpha-1} on [1,b],
// b^{-alpha} e^{b-x} beyond the taper level b.
struct TaperedParetoParams {
  double alpha;  // tail exponent, > 0
  double b;      // taper level, > 1
  void validate() const;
};

// Standard Pareto with support start fixed at 1.
struct ParetoParams {
  double alpha;
  void validate() const;
};

// One joint draw of the (tapered, untapered) innovation pair built from
// the same Pareto/exponential variates.
struct CoupledInnovation {
  double theta;  // Pareto draw, >= 1
  double r;      // unit exponential draw, >= 0
  double zeta;   // tapered value: theta if theta < b, else b + r
  double xi;     // centered tapered value, zeta - E zeta
  double eta;    // theta - E theta if 1 < alpha < 2, theta if alpha < 1
};

double tp_pdf(const TaperedParetoParams& p, double x);
double tp_cdf(const TaperedParetoParams& p, double x);
double tp_quantile(const TaperedParetoParams& p, double u);
double tp_sample(const TaperedParetoParams& p, RngStream& rng);

// mu_r(b) = E zeta^r, exact (closed form plus scaled incomplete gamma).
double tp_moment_exact(const TaperedParetoParams& p, double r);

// Leading-order large-b value of mu_r(b).
double tp_moment_asymptotic(const TaperedParetoParams& p, double r);

// Var xi = mu_2 - mu_1^2.
double centered_innovation_variance(const TaperedParetoParams& p);

// E|xi|^3 = E|zeta - mu_1|^3, by adaptive quadrature split at the
// density discontinuity and the sign change.
double tp_third_abs_central_moment(const TaperedParetoParams& p);

double pareto_pdf(const ParetoParams& p, double x);
double pareto_cdf(const ParetoParams& p, double x);
double pareto_mean(const ParetoParams& p);  // alpha/(alpha-1), needs alpha > 1

CoupledInnovation sample_coupled(const TaperedParetoParams& p, RngStream& rng);

}  // namespace tapsum
