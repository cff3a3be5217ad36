#include "tapsum/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tapsum {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Memory { Positive, Zero, Negative };
}  // namespace

void RegimeParams::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("regime: alpha must lie in (0,2)");
  if (!(beta > 0.5)) throw std::invalid_argument("regime: beta must exceed 1/2");
  if (!(gamma >= 0.0)) throw std::invalid_argument("regime: gamma must be nonnegative");
}

TaperingMode tapering_mode(const RegimeParams& p) {
  p.validate();
  const double bound = 1.0 / p.alpha;
  if (p.gamma < bound) return TaperingMode::Hard;
  if (p.gamma > bound) return TaperingMode::Soft;
  return TaperingMode::Boundary;
}

RegimeVerdict classify(const RegimeParams& p) {
  p.validate();
  RegimeVerdict v;
  v.tapering = tapering_mode(p);

  const double a = p.alpha, beta = p.beta, g = p.gamma;

  // beta = 1 sits on every case boundary; zero-sum filters need beta > 1.
  if (beta == 1.0 || (p.zero_sum && beta <= 1.0)) {
    v.theorem = Theorem::Unsupported;
    return v;
  }
  const Memory mem = p.zero_sum  ? Memory::Negative
                     : beta < 1.0 ? Memory::Positive
                                  : Memory::Zero;

  // hard-side bound (Theorem 1 gamma condition), when its beta range applies
  double c1 = -1.0;
  bool t1_ok = true;
  Theorem t1_case = Theorem::T1i;
  switch (mem) {
    case Memory::Positive:
      c1 = std::min(1.0 / a, (2.0 * beta - 1.0) / (2.0 - a));
      t1_case = Theorem::T1i;
      break;
    case Memory::Zero:
      c1 = std::min(1.0 / a, 1.0 / (2.0 - a));
      t1_case = Theorem::T1ii;
      break;
    case Memory::Negative:
      t1_ok = beta < 1.5;
      c1 = std::min((2.0 * beta - 1.0) / (2.0 - a), (3.0 - 2.0 * beta) / a);
      t1_case = Theorem::T1iii;
      break;
  }

  // soft-side bound (Theorem 2); requires alpha != 1 and alpha*beta > 1
  double c2 = kInf;
  bool t2_ok = (a != 1.0) && (a * beta > 1.0);
  Theorem t2_case = Theorem::T2i;
  switch (mem) {
    case Memory::Positive:
      c2 = 1.0 / a;
      t2_case = Theorem::T2i;
      break;
    case Memory::Zero:
      c2 = 1.0 / a;
      t2_case = Theorem::T2ii;
      break;
    case Memory::Negative:
      t2_ok = t2_ok && beta < 1.0 + 1.0 / a;
      if (t2_ok) c2 = 1.0 / a + (beta - 1.0) / (a * beta - 1.0);
      t2_case = Theorem::T2iii;
      break;
  }

  if (t1_ok && g < c1) {
    v.theorem = t1_case;
    v.limit = LimitKind::FBM;
    const double base = (mem == Memory::Zero) ? 0.5 : 1.5 - beta;
    v.hurst = base + g * (2.0 - a) / 2.0;
    return v;
  }
  if (t2_ok && g > c2) {
    v.theorem = t2_case;
    v.limit = (mem == Memory::Zero) ? LimitKind::StableLevy : LimitKind::LFSM;
    v.hurst = (mem == Memory::Zero) ? 1.0 / a : 1.0 / a + 1.0 - beta;
    return v;
  }
  if (!t1_ok && !t2_ok) {
    v.theorem = Theorem::Unsupported;
    return v;
  }
  if (a == 1.0 && (!t1_ok || g >= c1)) {
    // soft side with alpha = 1: excluded before Theorem 2
    v.theorem = Theorem::Unsupported;
    return v;
  }
  v.theorem = Theorem::UnknownGap;
  v.limit = LimitKind::Unknown;
  v.gap_bounds = {t1_ok ? c1 : 0.0, t2_ok ? c2 : kInf};
  return v;
}

double hurst_exponent(const RegimeParams& p) {
  const RegimeVerdict v = classify(p);
  if (!v.hurst)
    throw std::domain_error("hurst_exponent: no theorem case applies to these parameters");
  return *v.hurst;
}

double h_shift_check(const RegimeParams& p) {
  RegimeParams at_zero = p;
  at_zero.gamma = 0.0;
  return hurst_exponent(p) - hurst_exponent(at_zero);
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T1i: return "T1i";
    case Theorem::T1ii: return "T1ii";
    case Theorem::T1iii: return "T1iii";
    case Theorem::T2i: return "T2i";
    case Theorem::T2ii: return "T2ii";
    case Theorem::T2iii: return "T2iii";
    case Theorem::UnknownGap: return "UnknownGap";
    case Theorem::Unsupported: return "Unsupported";
  }
  return "?";
}

std::string limit_name(LimitKind k) {
  switch (k) {
    case LimitKind::FBM: return "FBM";
    case LimitKind::LFSM: return "LFSM";
    case LimitKind::StableLevy: return "StableLevy";
    case LimitKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string tapering_name(TaperingMode m) {
  switch (m) {
    case TaperingMode::Hard: return "Hard";
    case TaperingMode::Soft: return "Soft";
    case TaperingMode::Boundary: return "Boundary";
  }
  return "?";
}

}  // namespace tapsum
