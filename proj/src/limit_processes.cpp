#include "tapsum/limit_processes.hpp"

#include <fftw3.h>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "tapsum/quadrature.hpp"

namespace tapsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

bool grid_is_uniform(const std::vector<double>& g) {
  const double step = g[0];
  if (!(step > 0.0)) return false;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (std::fabs(g[k] - step * static_cast<double>(k + 1)) > 1e-9 * std::max(1.0, g[k]))
      return false;
  return true;
}

// Fractional Gaussian noise autocovariance at lag k for step delta.
double fgn_autocov(std::int64_t k, double delta, double H) {
  const double a = std::pow(static_cast<double>(std::llabs(k - 1)), 2.0 * H);
  const double b = std::pow(static_cast<double>(std::llabs(k + 1)), 2.0 * H);
  const double c = std::pow(static_cast<double>(std::llabs(k)), 2.0 * H);
  return 0.5 * std::pow(delta, 2.0 * H) * (a + b - 2.0 * c);
}

// Circulant-embedding sampler; returns false if the embedding has a
// materially negative eigenvalue and the caller should fall back.
bool sample_fbm_circulant(const FbmSpec& spec, RngStream& rng,
                          std::vector<double>& out) {
  const std::size_t N = spec.grid.size();
  const double delta = spec.grid[0];
  const std::size_t M = 2 * N;

  std::vector<std::complex<double>> c(M), lambda(M);
  for (std::size_t j = 0; j <= N; ++j) c[j] = fgn_autocov(j, delta, spec.H);
  for (std::size_t j = N + 1; j < M; ++j) c[j] = c[M - j];

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(M),
                            reinterpret_cast<fftw_complex*>(c.data()),
                            reinterpret_cast<fftw_complex*>(lambda.data()),
                            FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);

  double max_ev = 0.0, min_ev = 0.0;
  for (auto& l : lambda) {
    max_ev = std::max(max_ev, l.real());
    min_ev = std::min(min_ev, l.real());
  }
  bool ok = min_ev >= -1e-9 * std::max(1.0, max_ev);
  if (ok) {
    std::vector<std::complex<double>> v(M);
    v[0] = std::sqrt(std::max(0.0, lambda[0].real())) * rng.normal();
    v[N] = std::sqrt(std::max(0.0, lambda[N].real())) * rng.normal();
    for (std::size_t j = 1; j < N; ++j) {
      const double s = std::sqrt(std::max(0.0, lambda[j].real()) / 2.0);
      v[j] = std::complex<double>(s * rng.normal(), s * rng.normal());
      v[M - j] = std::conj(v[j]);
    }
    std::vector<std::complex<double>> w(M);
    fftw_plan plan2;
    {
      std::lock_guard<std::mutex> lock(fftw_plan_mutex());
      plan2 = fftw_plan_dft_1d(static_cast<int>(M),
                               reinterpret_cast<fftw_complex*>(v.data()),
                               reinterpret_cast<fftw_complex*>(w.data()),
                               FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan2);
    {
      std::lock_guard<std::mutex> lock(fftw_plan_mutex());
      fftw_destroy_plan(plan2);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(M));
    out.resize(N);
    double acc = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      acc += w[k].real() * scale;
      out[k] = acc;
    }
  }
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
  }
  return ok;
}

void sample_fbm_cholesky(const FbmSpec& spec, RngStream& rng,
                         std::vector<double>& out) {
  const std::size_t N = spec.grid.size();
  if (N > 2048)
    throw std::domain_error("sample_fbm: nonuniform grid too large for Cholesky fallback");
  Eigen::MatrixXd C(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      C(i, j) = fbm_covariance(spec.grid[i], spec.grid[j], spec.H);
  double jitter = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Eigen::MatrixXd Cj = C;
    if (jitter > 0.0) Cj.diagonal().array() += jitter;
    llt.compute(Cj);
    if (llt.info() == Eigen::Success) break;
    jitter = (jitter == 0.0) ? 1e-12 * C.trace() / static_cast<double>(N) : jitter * 100.0;
  }
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("sample_fbm: covariance matrix is not positive definite");
  Eigen::VectorXd z(N);
  for (std::size_t i = 0; i < N; ++i) z(i) = rng.normal();
  Eigen::VectorXd x = llt.matrixL() * z;
  out.assign(x.data(), x.data() + N);
}

}  // namespace

FbmSpec FbmSpec::uniform(double H, std::size_t points, double horizon) {
  FbmSpec s;
  s.H = H;
  s.grid.resize(points);
  for (std::size_t k = 0; k < points; ++k)
    s.grid[k] = horizon * static_cast<double>(k + 1) / static_cast<double>(points);
  s.validate();
  return s;
}

void FbmSpec::validate() const {
  if (!(H > 0.0 && H < 1.0))
    throw std::domain_error("fbm: H must lie in (0,1)");
  if (grid.empty()) throw std::invalid_argument("fbm: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("fbm: grid points must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("fbm: grid must be strictly increasing");
  }
}

double fbm_covariance(double s, double t, double H) {
  if (!(H > 0.0 && H < 1.0))
    throw std::domain_error("fbm_covariance: H must lie in (0,1)");
  if (s < 0.0 || t < 0.0)
    throw std::domain_error("fbm_covariance: times must be nonnegative");
  return 0.5 * (std::pow(s, 2.0 * H) + std::pow(t, 2.0 * H) -
                std::pow(std::fabs(t - s), 2.0 * H));
}

FbmPath sample_fbm(const FbmSpec& spec, RngStream& rng) {
  spec.validate();
  FbmPath p;
  if (grid_is_uniform(spec.grid) && sample_fbm_circulant(spec, rng, p.values))
    return p;
  p.cholesky_fallback = true;
  sample_fbm_cholesky(spec, rng, p.values);
  return p;
}

StableSpec StableSpec::source_convention(double alpha, double t) {
  StableSpec s{alpha, -std::tan(kPi * alpha / 2.0), t};
  s.validate();
  return s;
}

StableSpec StableSpec::totally_right_skewed(double alpha, double t) {
  StableSpec s{alpha, std::tan(kPi * alpha / 2.0), t};
  s.validate();
  return s;
}

double StableSpec::skewness() const {
  const double tn = std::tan(kPi * alpha / 2.0);
  if (tn == 0.0) return 0.0;
  return std::clamp(D / tn, -1.0, 1.0);
}

void StableSpec::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::domain_error("stable: alpha must lie in (0,2)");
  if (std::fabs(alpha - 1.0) < 1e-12)
    throw std::domain_error("stable: alpha = 1 is unsupported");
  if (!(t > 0.0)) throw std::domain_error("stable: horizon t must be positive");
}

std::complex<double> stable_cf(const StableSpec& spec, double u) {
  spec.validate();
  if (u == 0.0) return {1.0, 0.0};
  const double sgn = (u > 0.0) ? 1.0 : -1.0;
  const std::complex<double> expo =
      -spec.t * std::pow(std::fabs(u), spec.alpha) *
      std::complex<double>(1.0, -spec.D * sgn);
  return std::exp(expo);
}

double sample_stable(const StableSpec& spec, RngStream& rng) {
  spec.validate();
  const double a = spec.alpha;
  const double beta = spec.skewness();
  const double tn = std::tan(kPi * a / 2.0);
  const double B = std::atan(beta * tn) / a;
  const double S = std::pow(1.0 + beta * beta * tn * tn, 0.5 / a);
  const double U = kPi * (rng.uniform_open01() - 0.5);
  const double W = rng.exponential();
  const double x = S * std::sin(a * (U + B)) / std::pow(std::cos(U), 1.0 / a) *
                   std::pow(std::cos(U - a * (U + B)) / W, (1.0 - a) / a);
  return std::pow(spec.t, 1.0 / a) * x;
}

LfsmSpec LfsmSpec::make(double alpha, double beta, double h, double horizon,
                        double tail_frac) {
  LfsmSpec s;
  s.alpha = alpha;
  s.beta = beta;
  s.h = h;
  s.M = 1.0;
  s.validate();
  if (beta == 1.0) return s;  // kernel vanishes for s < 0

  auto knorm = [alpha, beta, horizon](double x) {
    const double pos_t = (horizon - x > 0.0) ? std::pow(horizon - x, 1.0 - beta) : 0.0;
    const double pos_0 = (-x > 0.0) ? std::pow(-x, 1.0 - beta) : 0.0;
    return std::pow(std::fabs(pos_t - pos_0), alpha);
  };
  const double ab = alpha * beta;  // > 1 since beta > 1/alpha
  for (double M = 4.0; M <= 1048576.0; M *= 2.0) {
    const double total = integrate(knorm, -M, 0.0, 1e-10, 1e-8) +
                         integrate(knorm, 0.0, horizon, 1e-10, 1e-8);
    const double tail = std::pow(std::fabs(1.0 - beta) * horizon, alpha) *
                        std::pow(M, 1.0 - ab) / (ab - 1.0);
    if (tail < tail_frac * total) {
      s.M = M;
      return s;
    }
  }
  throw std::domain_error("lfsm: no cutoff M meets the tail tolerance");
}

void LfsmSpec::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0) || std::fabs(alpha - 1.0) < 1e-12)
    throw std::domain_error("lfsm: alpha must lie in (0,2), alpha != 1");
  if (!(beta > 1.0 / alpha && beta < 1.0 + 1.0 / alpha))
    throw std::domain_error("lfsm: beta must lie in (1/alpha, 1 + 1/alpha)");
  if (!(h > 0.0)) throw std::domain_error("lfsm: step h must be positive");
  if (!(M >= 0.0)) throw std::domain_error("lfsm: cutoff M must be nonnegative");
}

std::vector<double> sample_lfsm(const LfsmSpec& spec,
                                const std::vector<double>& t_grid,
                                RngStream& rng) {
  spec.validate();
  if (t_grid.empty()) throw std::invalid_argument("lfsm: empty time grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0))
      throw std::invalid_argument("lfsm: time points must be positive");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("lfsm: time grid must be strictly increasing");
  }
  const double t_max = t_grid.back();
  const StableSpec unit = StableSpec{spec.alpha,
                                     std::tan(kPi * spec.alpha / 2.0), 1.0};
  const double inc_scale = std::pow(spec.h, 1.0 / spec.alpha);
  std::vector<double> out(t_grid.size(), 0.0);

  if (spec.beta == 1.0) {
    // degenerate case: running sum of the stable increments on (0, t]
    const std::int64_t steps =
        static_cast<std::int64_t>(std::floor(t_max / spec.h + 1e-9));
    double acc = 0.0;
    std::size_t g = 0;
    for (std::int64_t k = 1; k <= steps; ++k) {
      acc += inc_scale * sample_stable(unit, rng);
      while (g < t_grid.size() &&
             k == static_cast<std::int64_t>(std::floor(t_grid[g] / spec.h + 1e-9))) {
        out[g++] = acc;
      }
    }
    while (g < t_grid.size()) out[g++] = acc;
    return out;
  }

  const std::int64_t K =
      static_cast<std::int64_t>(std::ceil((spec.M + t_max) / spec.h));
  const double e = 1.0 - spec.beta;
  std::vector<double> dl(static_cast<std::size_t>(K));
  for (auto& v : dl) v = inc_scale * sample_stable(unit, rng);
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    const double t = t_grid[g];
    double acc = 0.0;
    for (std::int64_t i = 0; i < K; ++i) {
      const double s = -spec.M + (static_cast<double>(i) + 0.5) * spec.h;
      if (s >= t) break;
      const double k1 = (t - s > 0.0) ? std::pow(t - s, e) : 0.0;
      const double k2 = (-s > 0.0) ? std::pow(-s, e) : 0.0;
      acc += (k1 - k2) * dl[i];
    }
    out[g] = acc;
  }
  return out;
}

}  // namespace tapsum
