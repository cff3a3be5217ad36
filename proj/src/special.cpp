#include "tapsum/special.hpp"

#include <gsl/gsl_sf_zeta.h>

#include <cmath>
#include <stdexcept>

namespace tapsum {

double riemann_zeta(double s) {
  if (s <= 0.5 || s == 1.0)
    throw std::domain_error("riemann_zeta: need s > 1/2, s != 1");
  return gsl_sf_zeta(s);
}

double exp_scaled_upper_gamma(double a, double x) {
  if (a <= 0.0 || x <= 0.0)
    throw std::domain_error("exp_scaled_upper_gamma: need a > 0, x > 0");
  constexpr double kRelTol = 1e-12;
  if (x >= a + 1.0) {
    // Lentz continued fraction for Gamma(a,x) = e^{-x} x^a / (x+1-a - ...),
    // evaluated without the e^{-x} factor.
    double b = x + 1.0 - a;
    double c = 1e308;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
      const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
      b += 2.0;
      d = an * d + b;
      if (std::fabs(d) < 1e-300) d = 1e-300;
      c = b + an / c;
      if (std::fabs(c) < 1e-300) c = 1e-300;
      d = 1.0 / d;
      const double delta = d * c;
      h *= delta;
      if (std::fabs(delta - 1.0) < kRelTol) break;
    }
    return std::pow(x, a) * h;
  }
  // x < a+1: series for the lower incomplete gamma, then complement.
  // Here x is small so e^x itself is safe.
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 10000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kRelTol) break;
  }
  const double lower = std::pow(x, a) * sum;  // gamma(a,x) * e^{x}
  return std::exp(x) * std::tgamma(a) - lower;
}

}  // namespace tapsum
