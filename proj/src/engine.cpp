#include "tapsum/engine.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <memory>
#include <stdexcept>

#include "tapsum/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tapsum {

namespace {

// prefix sums A[i] = sum_{l=0}^{i} a_l for i = 0..len-1
std::vector<double> prefix_sums(const FilterSpec& f, std::int64_t len) {
  std::vector<double> A(static_cast<std::size_t>(len));
  double acc = 0.0;
  for (std::int64_t i = 0; i < len; ++i) {
    acc += coefficient(f, i);
    A[i] = acc;
  }
  return A;
}

// Analytic integral estimate of sum_{i >= J} (sum_{k=1}^n a_{k+i})^2,
// the part of V_1 beyond the truncation horizon.
double v1_tail_estimate(const FilterSpec& f, std::int64_t n, std::int64_t J) {
  if (f.kind == FilterKind::ExplicitFinite) return 0.0;
  const double beta = f.beta;
  const double scale = (f.kind == FilterKind::PowerLaw) ? f.c_a : (beta - 1.0);
  const double nn = static_cast<double>(n);
  auto phi2 = [beta](double w) {
    const double v = (std::pow(1.0 + w, 1.0 - beta) - std::pow(w, 1.0 - beta)) / (1.0 - beta);
    return v * v;
  };
  const double integral =
      integrate_to_inf(phi2, static_cast<double>(J) / nn, 1e-12, 1e-10);
  return scale * scale * std::pow(nn, 3.0 - 2.0 * beta) * integral;
}

struct HotQuantile {
  double alpha, b, inv_alpha, knee, log_term;
  explicit HotQuantile(const TaperedParetoParams& p)
      : alpha(p.alpha),
        b(p.b),
        inv_alpha(1.0 / p.alpha),
        knee(1.0 - std::pow(p.b, -p.alpha)),
        log_term(p.alpha * std::log(p.b)) {}
  double operator()(double u) const {
    if (u <= knee) return std::pow(1.0 - u, -inv_alpha);
    return b - (std::log1p(-u) + log_term);
  }
};

std::size_t next_pow2(std::size_t v) {
  std::size_t L = 1;
  while (L < v) L <<= 1;
  return L;
}

// FFTW plan pair for one transform size, shared across threads; execution
// uses the new-array interface on per-thread buffers.
class ConvPlans {
 public:
  explicit ConvPlans(std::size_t L) : L_(L) {
    in_ = fftw_alloc_real(L);
    out_ = fftw_alloc_complex(L / 2 + 1);
    std::memset(in_, 0, sizeof(double) * L);
    fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(L), in_, out_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(L), out_, in_, FFTW_ESTIMATE);
  }
  ~ConvPlans() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(in_);
    fftw_free(out_);
  }
  ConvPlans(const ConvPlans&) = delete;
  ConvPlans& operator=(const ConvPlans&) = delete;

  std::size_t size() const { return L_; }
  void forward(double* in, fftw_complex* out) const {
    fftw_execute_dft_r2c(fwd_, in, out);
  }
  void inverse(fftw_complex* in, double* out) const {
    fftw_execute_dft_c2r(inv_, in, out);
  }

 private:
  std::size_t L_;
  double* in_;
  fftw_complex* out_;
  fftw_plan fwd_, inv_;
};

struct FftBuffers {
  explicit FftBuffers(std::size_t L) : L_(L) {
    real = fftw_alloc_real(L);
    freq = fftw_alloc_complex(L / 2 + 1);
  }
  ~FftBuffers() {
    fftw_free(real);
    fftw_free(freq);
  }
  FftBuffers(const FftBuffers&) = delete;
  FftBuffers& operator=(const FftBuffers&) = delete;
  std::size_t L_;
  double* real;
  fftw_complex* freq;
};

double normalization_constant(const SimulationPlan& plan) {
  switch (plan.normalization) {
    case Normalization::ExactStdDev:
      return std::sqrt(variance_exact(plan));
    case Normalization::TheoreticalPower:
      if (!plan.hurst)
        throw std::invalid_argument("simulate: TheoreticalPower normalization needs plan.hurst");
      return std::pow(static_cast<double>(plan.n), *plan.hurst);
    case Normalization::Raw:
      return 1.0;
  }
  return 1.0;
}

// Innovation generator shared by the convolution and reference paths:
// draws xi_j for j = 1-J .. n in ascending order into dst[0 .. n+J-1].
void draw_innovations(const SimulationPlan& plan, const HotQuantile& q,
                      double mean1, std::uint64_t replicate, double* dst) {
  RngStream rng(plan.seed, replicate);
  const std::int64_t count = plan.n + plan.truncation_J;
  for (std::int64_t i = 0; i < count; ++i) dst[i] = q(rng.uniform_open01()) - mean1;
}

// Coupled draws: tapered (xi) and Pareto (eta) from shared variates.
void draw_coupled(const SimulationPlan& plan, double mean1,
                  std::uint64_t replicate, double* xi, double* eta) {
  RngStream rng(plan.seed, replicate);
  const double alpha = plan.params.alpha, b = plan.params.b;
  const double inv_alpha = 1.0 / alpha;
  const double pareto_shift = (alpha > 1.0) ? alpha / (alpha - 1.0) : 0.0;
  const std::int64_t count = plan.n + plan.truncation_J;
  for (std::int64_t i = 0; i < count; ++i) {
    const double u = rng.uniform_open01();
    const double theta = std::pow(1.0 - u, -inv_alpha);
    const double r = rng.exponential();
    const double zeta = (theta < b) ? theta : b + r;
    xi[i] = zeta - mean1;
    eta[i] = theta - pareto_shift;
  }
}

// X_k = sum_i a_i xi_{k-i} for k = 1..n, then running sums evaluated at
// the grid's [nt] indices.  xi is indexed as in draw_innovations.
void partial_sums_direct(const std::vector<double>& a, const double* xi,
                         std::int64_t n, std::int64_t J,
                         const std::vector<std::int64_t>& m_grid, double* out) {
  double running = 0.0;
  std::size_t g = 0;
  for (std::int64_t k = 1; k <= n && g < m_grid.size(); ++k) {
    double x = 0.0;
    const std::int64_t imax = std::min<std::int64_t>(J, k - 1 + J);
    for (std::int64_t i = 0; i <= imax; ++i) x += a[i] * xi[k - 1 + J - i];
    running += x;
    while (g < m_grid.size() && m_grid[g] == k) out[g++] = running;
  }
  while (g < m_grid.size()) out[g++] = running;  // m = 0 entries never reach here
}

void partial_sums_fft(const ConvPlans& plans, const fftw_complex* filter_hat,
                      FftBuffers& buf, const double* xi, std::int64_t n,
                      std::int64_t J, const std::vector<std::int64_t>& m_grid,
                      double* out) {
  const std::size_t L = plans.size();
  const std::size_t len = static_cast<std::size_t>(n + J);
  std::memcpy(buf.real, xi, sizeof(double) * len);
  std::memset(buf.real + len, 0, sizeof(double) * (L - len));
  plans.forward(buf.real, buf.freq);
  const double scale = 1.0 / static_cast<double>(L);
  for (std::size_t i = 0; i <= L / 2; ++i) {
    const double re = buf.freq[i][0] * filter_hat[i][0] - buf.freq[i][1] * filter_hat[i][1];
    const double im = buf.freq[i][0] * filter_hat[i][1] + buf.freq[i][1] * filter_hat[i][0];
    buf.freq[i][0] = re * scale;
    buf.freq[i][1] = im * scale;
  }
  plans.inverse(buf.freq, buf.real);
  // X_k sits at convolution index k-1+J
  double running = 0.0;
  std::size_t g = 0;
  for (std::int64_t k = 1; k <= n && g < m_grid.size(); ++k) {
    running += buf.real[k - 1 + J];
    while (g < m_grid.size() && m_grid[g] == k) out[g++] = running;
  }
  while (g < m_grid.size()) out[g++] = running;
}

std::vector<std::int64_t> grid_indices(const SimulationPlan& plan) {
  std::vector<std::int64_t> m(plan.t_grid.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = static_cast<std::int64_t>(std::floor(static_cast<double>(plan.n) * plan.t_grid[i]));
  return m;
}

}  // namespace

SimulationPlan SimulationPlan::make(double alpha, double gamma, FilterSpec filter,
                                    std::int64_t n, std::vector<double> t_grid,
                                    int replicates, std::int64_t truncation_J,
                                    std::uint64_t seed, Normalization norm) {
  SimulationPlan p;
  p.params = {alpha, std::pow(static_cast<double>(n), gamma)};
  p.gamma = gamma;
  p.filter = std::move(filter);
  p.n = n;
  p.t_grid = std::move(t_grid);
  p.replicates = replicates;
  p.truncation_J = truncation_J;
  p.seed = seed;
  p.normalization = norm;
  p.validate();
  return p;
}

void SimulationPlan::validate() const {
  if (n < 1) throw std::invalid_argument("plan: n must be positive");
  const double expect_b = std::pow(static_cast<double>(n), gamma);
  if (!(expect_b > 1.0))
    throw std::invalid_argument("plan: b_n = n^gamma must exceed 1");
  if (std::fabs(params.b - expect_b) > 1e-12 * expect_b)
    throw std::invalid_argument("plan: stored b does not match n^gamma");
  params.validate();
  filter.validate();
  if (t_grid.empty()) throw std::invalid_argument("plan: t_grid must be nonempty");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0 && t_grid[i] <= 1.0))
      throw std::invalid_argument("plan: t_grid values must lie in (0,1]");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("plan: t_grid must be strictly increasing");
  }
  if (replicates < 1) throw std::invalid_argument("plan: replicates must be positive");
  if (truncation_J < 1) throw std::invalid_argument("plan: truncation_J must be positive");
}

std::vector<double> PathEnsemble::column(std::size_t c) const {
  std::vector<double> v(rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

DCoefficients d_coefficients(const FilterSpec& f, std::int64_t n, double t,
                             std::int64_t J) {
  if (n < 1 || !(t > 0.0 && t <= 1.0) || J < 1)
    throw std::invalid_argument("d_coefficients: bad arguments");
  const std::int64_t m = static_cast<std::int64_t>(std::floor(static_cast<double>(n) * t));
  DCoefficients d;
  d.n = n;
  d.t = t;
  d.j_min = 1 - J;
  d.values.assign(static_cast<std::size_t>(m - d.j_min + 1), 0.0);
  if (m < 1) return d;
  const auto A = prefix_sums(f, m + J);
  for (std::int64_t j = 1; j <= m; ++j) d.values[j - d.j_min] = A[m - j];
  for (std::int64_t j = d.j_min; j <= 0; ++j)
    d.values[j - d.j_min] = A[m - j] - A[-j];
  return d;
}

double sum_d_squared(const FilterSpec& f, std::int64_t n, std::int64_t J) {
  const auto A = prefix_sums(f, n + J);
  double s = 0.0;
  for (std::int64_t j = 1; j <= n; ++j) s += A[n - j] * A[n - j];
  for (std::int64_t i = 0; i < J; ++i) {
    const double d = A[n + i] - A[i];
    s += d * d;
  }
  return s;
}

double sum_d_squared_tail_corrected(const FilterSpec& f, std::int64_t n,
                                    std::int64_t J) {
  return sum_d_squared(f, n, J) + v1_tail_estimate(f, n, J);
}

double sum_abs_d_pow(const FilterSpec& f, std::int64_t n, std::int64_t J,
                     double p) {
  const auto A = prefix_sums(f, n + J);
  double s = 0.0;
  for (std::int64_t j = 1; j <= n; ++j) s += std::pow(std::fabs(A[n - j]), p);
  for (std::int64_t i = 0; i < J; ++i)
    s += std::pow(std::fabs(A[n + i] - A[i]), p);
  return s;
}

double prop1_constant(Prop1Case c, double beta) {
  auto v1_integral = [beta]() {
    auto inner2 = [beta](double z) {
      const double v =
          (std::pow(1.0 + z, 1.0 - beta) - std::pow(z, 1.0 - beta)) / (1.0 - beta);
      return v * v;
    };
    return integrate_to_inf(inner2, 0.0, 1e-12, 1e-10);
  };
  switch (c) {
    case Prop1Case::I: {
      if (!(beta > 0.5 && beta < 1.0))
        throw std::domain_error("prop1_constant case i: beta must lie in (1/2,1)");
      const double v2 = 1.0 / ((1.0 - beta) * (1.0 - beta) * (3.0 - 2.0 * beta));
      return v1_integral() + v2;
    }
    case Prop1Case::II:
      throw std::domain_error("prop1_constant case ii depends on the filter; pass a FilterSpec");
    case Prop1Case::III: {
      if (!(beta > 1.0 && beta < 1.5))
        throw std::domain_error("prop1_constant case iii: beta must lie in (1,3/2)");
      const double s2 = (beta - 1.0) * (beta - 1.0);
      const double v2 = 1.0 / (s2 * (3.0 - 2.0 * beta));
      return s2 * (v1_integral() + v2);
    }
  }
  return 0.0;
}

double prop1_constant(Prop1Case c, const FilterSpec& f) {
  if (c == Prop1Case::II) {
    const double s = filter_sum(f);
    return s * s;
  }
  const double base = prop1_constant(c, f.beta);
  if (f.kind == FilterKind::PowerLaw) return f.c_a * f.c_a * base;
  return base;
}

double variance_exact(const SimulationPlan& plan) {
  plan.validate();
  return sum_d_squared(plan.filter, plan.n, plan.truncation_J) *
         centered_innovation_variance(plan.params);
}

double lyapunov_ratio(const SimulationPlan& plan) {
  plan.validate();
  const double s2 = sum_d_squared(plan.filter, plan.n, plan.truncation_J);
  const double s3 = sum_abs_d_pow(plan.filter, plan.n, plan.truncation_J, 3.0);
  const double var = centered_innovation_variance(plan.params);
  const double m3 = tp_third_abs_central_moment(plan.params);
  return (s3 / std::pow(s2, 1.5)) * (m3 / std::pow(var, 1.5));
}

namespace {

enum class CoupledSide { None, Both };

// Shared driver: fills `values` (and `values2` when coupled).
void run_simulation(const SimulationPlan& plan, bool coupled, bool use_fft_path,
                    std::vector<double>& values, std::vector<double>* values2) {
  const std::int64_t n = plan.n, J = plan.truncation_J;
  const std::size_t cols = plan.t_grid.size();
  const auto m_grid = grid_indices(plan);
  const auto a = filter_coefficients(plan.filter, J);
  const double mean1 = tp_moment_exact(plan.params, 1.0);
  const HotQuantile quantile(plan.params);

  const std::size_t len = static_cast<std::size_t>(n + J);
  const bool fft = use_fft_path && (n + J >= 4096);
  std::size_t L = 0;
  std::unique_ptr<ConvPlans> plans;
  std::vector<std::complex<double>> filter_hat;
  if (fft) {
    L = next_pow2(static_cast<std::size_t>(n + 2 * J + 1));
    plans = std::make_unique<ConvPlans>(L);
    FftBuffers fb(L);
    std::memset(fb.real, 0, sizeof(double) * L);
    std::memcpy(fb.real, a.data(), sizeof(double) * a.size());
    filter_hat.resize(L / 2 + 1);
    plans->forward(fb.real, reinterpret_cast<fftw_complex*>(filter_hat.data()));
  }
  const fftw_complex* filter_hat_raw =
      reinterpret_cast<const fftw_complex*>(filter_hat.data());

#pragma omp parallel
  {
    std::vector<double> xi(len), eta(coupled ? len : 0);
    std::unique_ptr<FftBuffers> buf;
    if (fft) buf = std::make_unique<FftBuffers>(L);

#pragma omp for schedule(dynamic)
    for (int rep = 0; rep < plan.replicates; ++rep) {
      if (coupled) {
        draw_coupled(plan, mean1, static_cast<std::uint64_t>(rep), xi.data(),
                     eta.data());
      } else {
        draw_innovations(plan, quantile, mean1, static_cast<std::uint64_t>(rep),
                         xi.data());
      }
      double* out = &values[static_cast<std::size_t>(rep) * cols];
      if (fft) {
        partial_sums_fft(*plans, filter_hat_raw, *buf, xi.data(), n, J,
                         m_grid, out);
      } else {
        partial_sums_direct(a, xi.data(), n, J, m_grid, out);
      }
      if (coupled) {
        double* out2 = &(*values2)[static_cast<std::size_t>(rep) * cols];
        if (fft) {
          partial_sums_fft(*plans, filter_hat_raw, *buf, eta.data(), n, J,
                           m_grid, out2);
        } else {
          partial_sums_direct(a, eta.data(), n, J, m_grid, out2);
        }
      }
    }
  }
}

}  // namespace

PathEnsemble simulate(const SimulationPlan& plan) {
  plan.validate();
  PathEnsemble e;
  e.plan = plan;
  e.rows = static_cast<std::size_t>(plan.replicates);
  e.cols = plan.t_grid.size();
  e.values.assign(e.rows * e.cols, 0.0);
  run_simulation(plan, false, true, e.values, nullptr);
  e.normalization_used = normalization_constant(plan);
  if (e.normalization_used != 1.0)
    for (double& v : e.values) v /= e.normalization_used;
  return e;
}

PathEnsemble simulate_reference(const SimulationPlan& plan) {
  plan.validate();
  PathEnsemble e;
  e.plan = plan;
  e.rows = static_cast<std::size_t>(plan.replicates);
  e.cols = plan.t_grid.size();
  e.values.assign(e.rows * e.cols, 0.0);

  const std::int64_t n = plan.n, J = plan.truncation_J;
  const std::size_t len = static_cast<std::size_t>(n + J);
  const double mean1 = tp_moment_exact(plan.params, 1.0);
  const HotQuantile quantile(plan.params);
  std::vector<DCoefficients> dcs;
  dcs.reserve(e.cols);
  for (double t : plan.t_grid) dcs.push_back(d_coefficients(plan.filter, n, t, J));

  std::vector<double> xi(len);
  for (int rep = 0; rep < plan.replicates; ++rep) {
    draw_innovations(plan, quantile, mean1, static_cast<std::uint64_t>(rep), xi.data());
    for (std::size_t c = 0; c < e.cols; ++c) {
      const DCoefficients& d = dcs[c];
      double s = 0.0;
      // xi[i] holds xi_j with j = i + 1 - J
      for (std::int64_t j = d.j_min; j <= d.n; ++j) {
        const std::int64_t i = j - 1 + J;
        if (i >= 0 && i < static_cast<std::int64_t>(len)) s += d(j) * xi[i];
      }
      e.values[static_cast<std::size_t>(rep) * e.cols + c] = s;
    }
  }
  e.normalization_used = normalization_constant(plan);
  if (e.normalization_used != 1.0)
    for (double& v : e.values) v /= e.normalization_used;
  return e;
}

std::pair<PathEnsemble, PathEnsemble> simulate_coupled(const SimulationPlan& plan) {
  plan.validate();
  if (std::fabs(plan.params.alpha - 1.0) < 1e-12)
    throw std::invalid_argument("simulate_coupled: alpha = 1 is unsupported");
  PathEnsemble tapered, pareto;
  for (PathEnsemble* e : {&tapered, &pareto}) {
    e->plan = plan;
    e->rows = static_cast<std::size_t>(plan.replicates);
    e->cols = plan.t_grid.size();
    e->values.assign(e->rows * e->cols, 0.0);
  }
  run_simulation(plan, true, true, tapered.values, &pareto.values);
  const double an = normalization_constant(plan);
  tapered.normalization_used = pareto.normalization_used = an;
  if (an != 1.0) {
    for (double& v : tapered.values) v /= an;
    for (double& v : pareto.values) v /= an;
  }
  return {std::move(tapered), std::move(pareto)};
}

}  // namespace tapsum
