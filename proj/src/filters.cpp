#include "tapsum/filters.hpp"

#include <cmath>
#include <stdexcept>

#include "tapsum/special.hpp"

namespace tapsum {

FilterSpec FilterSpec::power_law(double beta, double c_a) {
  FilterSpec f;
  f.kind = FilterKind::PowerLaw;
  f.beta = beta;
  f.c_a = c_a;
  f.validate();
  return f;
}

FilterSpec FilterSpec::zero_sum(double beta) {
  FilterSpec f;
  f.kind = FilterKind::ZeroSumTelescoping;
  f.beta = beta;
  f.validate();
  return f;
}

FilterSpec FilterSpec::explicit_finite(std::vector<double> coeffs) {
  FilterSpec f;
  f.kind = FilterKind::ExplicitFinite;
  f.coeffs = std::move(coeffs);
  f.validate();
  return f;
}

void FilterSpec::validate() const {
  switch (kind) {
    case FilterKind::PowerLaw:
      if (!(beta > 0.5)) throw std::invalid_argument("power-law filter: beta must exceed 1/2");
      if (beta == 1.0) throw std::invalid_argument("power-law filter: beta = 1 not supported");
      if (c_a == 0.0) throw std::invalid_argument("power-law filter: c_a must be nonzero");
      break;
    case FilterKind::ZeroSumTelescoping:
      if (!(beta > 1.0)) throw std::invalid_argument("zero-sum filter: beta must exceed 1");
      break;
    case FilterKind::ExplicitFinite:
      if (coeffs.empty()) throw std::invalid_argument("explicit filter: needs at least one coefficient");
      break;
  }
}

double coefficient(const FilterSpec& f, std::int64_t j) {
  if (j < 0) throw std::domain_error("coefficient: index must be nonnegative");
  switch (f.kind) {
    case FilterKind::PowerLaw:
      if (j == 0) return f.beta < 1.0 ? -f.c_a * riemann_zeta(f.beta) : f.c_a;
      return f.c_a * std::pow(static_cast<double>(j), -f.beta);
    case FilterKind::ZeroSumTelescoping: {
      if (j == 0) return -1.0;
      const double x = static_cast<double>(j);
      return std::pow(x, 1.0 - f.beta) - std::pow(x + 1.0, 1.0 - f.beta);
    }
    case FilterKind::ExplicitFinite:
      return j < static_cast<std::int64_t>(f.coeffs.size()) ? f.coeffs[j] : 0.0;
  }
  return 0.0;
}

double filter_sum(const FilterSpec& f) {
  switch (f.kind) {
    case FilterKind::PowerLaw: {
      if (f.beta <= 1.0)
        throw std::domain_error("filter_sum: power-law series diverges for beta <= 1");
      return coefficient(f, 0) + f.c_a * riemann_zeta(f.beta);
    }
    case FilterKind::ZeroSumTelescoping:
      return 0.0;
    case FilterKind::ExplicitFinite: {
      double s = 0.0;
      for (double a : f.coeffs) s += a;
      return s;
    }
  }
  return 0.0;
}

std::int64_t truncation_horizon(const FilterSpec& f, double p, double tol) {
  if (!(p > 0.0) || !(tol > 0.0))
    throw std::domain_error("truncation_horizon: p and tol must be positive");
  if (f.kind == FilterKind::ExplicitFinite) {
    std::int64_t J = 1;
    while (J < static_cast<std::int64_t>(f.coeffs.size())) J <<= 1;
    return J;
  }
  // asymptotically |a_j| ~ c j^{-beta}; the p-norm tail beyond J is bounded
  // by c^p J^{1-p beta} / (p beta - 1)
  const double decay = p * f.beta;
  if (decay <= 1.0)
    throw std::domain_error("truncation_horizon: |a|^p series diverges for this filter");
  const double c = (f.kind == FilterKind::PowerLaw) ? std::fabs(f.c_a) : f.beta - 1.0;

  double head = std::pow(std::fabs(coefficient(f, 0)), p);
  std::int64_t J = 1;
  std::int64_t covered = 0;  // head includes |a_j|^p for j <= covered
  for (; J < (std::int64_t{1} << 62); J <<= 1) {
    for (std::int64_t j = covered + 1; j <= J && j <= (std::int64_t{1} << 24); ++j)
      head += std::pow(std::fabs(coefficient(f, j)), p);
    covered = std::min<std::int64_t>(J, std::int64_t{1} << 24);
    const double tail =
        std::pow(c, p) * std::pow(static_cast<double>(J), 1.0 - decay) / (decay - 1.0);
    if (tail <= tol * head) return J;
  }
  throw std::domain_error("truncation_horizon: no representable horizon meets the tolerance");
}

std::vector<double> filter_coefficients(const FilterSpec& f, std::int64_t J) {
  std::vector<double> a(static_cast<std::size_t>(J) + 1);
  for (std::int64_t j = 0; j <= J; ++j) a[j] = coefficient(f, j);
  return a;
}

}  // namespace tapsum
