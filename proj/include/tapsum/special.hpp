#pragma once

namespace tapsum {

// Riemann zeta on s > 1/2, s != 1 (analytic continuation for s < 1).
double riemann_zeta(double s);

// e^x * Gamma(a, x) for a > 0, x > 0, where Gamma(a,x) is the upper
// incomplete gamma function.  Stable for arbitrarily large x (the e^{-x}
// decay is cancelled analytically, never through exp overflow).
// Continued-fraction expansion with relative tolerance 1e-12 for
// x >= a + 1, power series otherwise.
double exp_scaled_upper_gamma(double a, double x);

}  // namespace tapsum
