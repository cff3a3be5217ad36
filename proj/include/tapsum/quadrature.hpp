#pragma once

#include <functional>

namespace tapsum {

// Adaptive quadrature on [a,b] (GSL QAGS; handles integrable endpoint
// singularities).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-10);

// Adaptive quadrature on [a, +inf) (GSL QAGIU).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol = 1e-10, double rel_tol = 1e-10);

}  // namespace tapsum
