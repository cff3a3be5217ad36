#include "tapsum/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace tapsum {
namespace {

double trampoline(double x, void* p) {
  return (*static_cast<const std::function<double(double)>*>(p))(x);
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const {
    gsl_integration_workspace_free(w);
  }
};

double run(const std::function<double(double)>& f, double a, double b,
           bool to_inf, double abs_tol, double rel_tol) {
  static const int once = [] {
    gsl_set_error_handler_off();
    return 0;
  }();
  (void)once;

  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(4096));
  gsl_function gf;
  gf.function = &trampoline;
  gf.params = const_cast<std::function<double(double)>*>(&f);
  double result = 0.0, err = 0.0;
  int status;
  if (to_inf) {
    status = gsl_integration_qagiu(&gf, a, abs_tol, rel_tol, 4096, ws.get(),
                                   &result, &err);
  } else {
    status = gsl_integration_qags(&gf, a, b, abs_tol, rel_tol, 4096, ws.get(),
                                  &result, &err);
  }
  if (status != GSL_SUCCESS && status != GSL_EROUND)
    throw std::runtime_error(std::string("quadrature failed: ") +
                             gsl_strerror(status));
  return result;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
  return run(f, a, b, false, abs_tol, rel_tol);
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol, double rel_tol) {
  return run(f, a, 0.0, true, abs_tol, rel_tol);
}

}  // namespace tapsum
