#pragma once

#include <optional>
#include <string>
#include <utility>

namespace tapsum {

enum class Theorem { T1i, T1ii, T1iii, T2i, T2ii, T2iii, UnknownGap, Unsupported };
enum class LimitKind { FBM, LFSM, StableLevy, Unknown };
enum class TaperingMode { Hard, Soft, Boundary };

struct RegimeParams {
  double alpha;   // tail exponent, in (0,2)
  double beta;    // filter decay, > 1/2
  double gamma;   // taper growth exponent b_n = n^gamma, >= 0
  bool zero_sum;  // sum of filter coefficients is exactly 0
  void validate() const;
};

struct RegimeVerdict {
  Theorem theorem = Theorem::Unsupported;
  LimitKind limit = LimitKind::Unknown;
  std::optional<double> hurst;
  TaperingMode tapering = TaperingMode::Hard;
  // gamma interval (C1, C2) with no known limit, reported for UnknownGap
  std::optional<std::pair<double, double>> gap_bounds;
};

TaperingMode tapering_mode(const RegimeParams& p);
RegimeVerdict classify(const RegimeParams& p);

// The verdict's Hurst exponent; throws if the verdict carries none.
double hurst_exponent(const RegimeParams& p);

// hurst(p) - hurst(p with gamma = 0); equals gamma(2-alpha)/2 for every
// Theorem 1 case.
double h_shift_check(const RegimeParams& p);

std::string theorem_name(Theorem t);
std::string limit_name(LimitKind k);
std::string tapering_name(TaperingMode m);

}  // namespace tapsum
