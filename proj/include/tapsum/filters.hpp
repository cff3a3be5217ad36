#pragma once

#include <cstdint>
#include <vector>

namespace tapsum {

enum class FilterKind { PowerLaw, ZeroSumTelescoping, ExplicitFinite };

// Filter sequence {a_j} with prescribed decay a_j ~ c j^{-beta}.
//
// PowerLaw: a_j = c_a j^{-beta} for j >= 1.  For beta < 1 the head
// coefficient is a_0 = -c_a zeta(beta) so that the prefix sums track the
// integral of x^{-beta} without an O(1) offset (the Euler-Maclaurin
// constant cancels); for beta > 1 the convention a_0 = c_a applies.
//
// ZeroSumTelescoping: a_0 = -1, a_j = j^{1-beta} - (j+1)^{1-beta}, so
// a_j ~ (beta-1) j^{-beta} and every partial sum telescopes to
// -(N+1)^{1-beta} -> 0.
//
// ExplicitFinite: an arbitrary finite list, zero-extended.
struct FilterSpec {
  FilterKind kind = FilterKind::ExplicitFinite;
  double beta = 0.0;
  double c_a = 1.0;
  std::vector<double> coeffs;

  static FilterSpec power_law(double beta, double c_a = 1.0);
  static FilterSpec zero_sum(double beta);
  static FilterSpec explicit_finite(std::vector<double> coeffs);
  static FilterSpec identity() { return explicit_finite({1.0}); }

  bool zero_sum_flag() const { return kind == FilterKind::ZeroSumTelescoping; }
  void validate() const;
};

double coefficient(const FilterSpec& f, std::int64_t j);

// Sum of the series; exact 0 for ZeroSumTelescoping, exact finite sum for
// ExplicitFinite, a_0 + c_a zeta(beta) for PowerLaw with beta > 1.
double filter_sum(const FilterSpec& f);

// Smallest power-of-two J whose tail sum_{j>J} |a_j|^p is below
// tol * sum_{j<=J} |a_j|^p (tail bounded by the integral estimate).
std::int64_t truncation_horizon(const FilterSpec& f, double p, double tol);

// Coefficients a_0..a_J as a dense vector.
std::vector<double> filter_coefficients(const FilterSpec& f, std::int64_t J);

}  // namespace tapsum
