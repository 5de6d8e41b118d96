#include "qchan/stochastic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qchan/rng.hpp"

namespace qchan {

namespace {

struct SamplePlan {
  long long n_steps;
  std::vector<long long> sample_steps;
  std::vector<double> times;
};

void validate(const SSEConfig& cfg) {
  if (!(cfg.tau > 0.0)) throw std::invalid_argument("SSEConfig: tau must be > 0");
  if (!(cfg.dt > 0.0) || cfg.dt > cfg.tau / 100.0)
    throw std::invalid_argument("SSEConfig: need 0 < dt <= tau/100");
  if (!(cfg.t_final >= cfg.dt))
    throw std::invalid_argument("SSEConfig: t_final must be >= dt");
  if (cfg.n_traj < 1) throw std::invalid_argument("SSEConfig: n_traj must be >= 1");
  if (cfg.sample_count < 2)
    throw std::invalid_argument("SSEConfig: sample_count must be >= 2");
  const double nrm = std::sqrt(std::norm(cfg.initial_state[0]) +
                               std::norm(cfg.initial_state[1]));
  if (std::abs(nrm - 1.0) > 1e-12)
    throw std::invalid_argument("SSEConfig: initial state must have unit norm");
}

SamplePlan make_plan(const SSEConfig& cfg) {
  SamplePlan plan;
  plan.n_steps = std::max<long long>(1, std::llround(cfg.t_final / cfg.dt));
  plan.sample_steps.resize(cfg.sample_count);
  plan.times.resize(cfg.sample_count);
  for (int k = 0; k < cfg.sample_count; ++k) {
    const long long step = std::llround(static_cast<double>(plan.n_steps) * k /
                                        (cfg.sample_count - 1));
    plan.sample_steps[k] = step;
    plan.times[k] = static_cast<double>(step) * cfg.dt;
  }
  return plan;
}

Vec3 bloch_of(const std::array<complexd, 2>& psi) {
  const complexd cross = std::conj(psi[0]) * psi[1];
  return Vec3{{2.0 * cross.real(), 2.0 * cross.imag(),
               std::norm(psi[0]) - std::norm(psi[1])}};
}

void trajectory_into(const SSEConfig& cfg, const SamplePlan& plan,
                     long long index, Vec3* out) {
  const double scale = std::sqrt(cfg.dt / cfg.tau);
  std::array<complexd, 2> psi = cfg.initial_state;
  size_t next_sample = 0;
  for (long long step = 0; step <= plan.n_steps; ++step) {
    while (next_sample < plan.sample_steps.size() &&
           plan.sample_steps[next_sample] == step)
      out[next_sample++] = bloch_of(psi);
    if (step == plan.n_steps) break;
    const Vec3 dw = scale * gaussian3(cfg.seed, static_cast<std::uint64_t>(index),
                                      static_cast<std::uint64_t>(step));
    psi = sse_kick(psi, dw);
  }
}

EnsembleResult reduce(const SSEConfig& cfg, const SamplePlan& plan,
                      const std::vector<Vec3>& samples) {
  const int ns = cfg.sample_count;
  const long long n = cfg.n_traj;
  EnsembleResult res;
  res.times = plan.times;
  res.mean_bloch.assign(ns, Vec3{});
  res.stderr_bloch.assign(ns, Vec3{});
  res.initial_bloch = bloch_of(cfg.initial_state);
  res.n_traj = n;

  for (long long i = 0; i < n; ++i)
    for (int k = 0; k < ns; ++k)
      for (int c = 0; c < 3; ++c)
        res.mean_bloch[k][c] += samples[i * ns + k][c];
  for (int k = 0; k < ns; ++k)
    for (int c = 0; c < 3; ++c) res.mean_bloch[k][c] /= static_cast<double>(n);

  if (n < 2) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int k = 0; k < ns; ++k)
      for (int c = 0; c < 3; ++c) res.stderr_bloch[k][c] = nan;
    return res;
  }

  for (long long i = 0; i < n; ++i)
    for (int k = 0; k < ns; ++k)
      for (int c = 0; c < 3; ++c) {
        const double d = samples[i * ns + k][c] - res.mean_bloch[k][c];
        res.stderr_bloch[k][c] += d * d;
      }
  for (int k = 0; k < ns; ++k)
    for (int c = 0; c < 3; ++c)
      res.stderr_bloch[k][c] = std::sqrt(res.stderr_bloch[k][c] /
                                         (static_cast<double>(n - 1) * n));
  return res;
}

}  // namespace

std::array<complexd, 2> sse_kick(const std::array<complexd, 2>& psi, const Vec3& dw) {
  const double theta = dw.norm();
  if (theta == 0.0) return psi;
  // cos(theta/2) I - i sin(theta/2) (n.sigma), with the axis normalization
  // folded into s so the components of dw can be used directly.
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta) / theta;
  const complexd u00(c, -s * dw[2]);
  const complexd u01(-s * dw[1], -s * dw[0]);
  const complexd u10(s * dw[1], -s * dw[0]);
  const complexd u11(c, s * dw[2]);
  return {u00 * psi[0] + u01 * psi[1], u10 * psi[0] + u11 * psi[1]};
}

std::vector<Vec3> run_trajectory(const SSEConfig& cfg, long long trajectory_index) {
  validate(cfg);
  const SamplePlan plan = make_plan(cfg);
  std::vector<Vec3> out(cfg.sample_count);
  trajectory_into(cfg, plan, trajectory_index, out.data());
  return out;
}

EnsembleResult run_ensemble(const SSEConfig& cfg) {
  validate(cfg);
  const SamplePlan plan = make_plan(cfg);
  std::vector<Vec3> samples(static_cast<size_t>(cfg.n_traj) * cfg.sample_count);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < cfg.n_traj; ++i)
    trajectory_into(cfg, plan, i, samples.data() + i * cfg.sample_count);
  return reduce(cfg, plan, samples);
}

EnsembleResult run_ensemble_serial(const SSEConfig& cfg) {
  validate(cfg);
  const SamplePlan plan = make_plan(cfg);
  std::vector<Vec3> samples(static_cast<size_t>(cfg.n_traj) * cfg.sample_count);
  for (long long i = 0; i < cfg.n_traj; ++i)
    trajectory_into(cfg, plan, i, samples.data() + i * cfg.sample_count);
  return reduce(cfg, plan, samples);
}

ZScoreReport compare_to_analytic(const EnsembleResult& res, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("compare_to_analytic: tau must be > 0");
  ZScoreReport report;
  report.times = res.times;
  report.z.resize(res.times.size());
  for (size_t k = 0; k < res.times.size(); ++k) {
    const double decay = std::exp(-res.times[k] / tau);
    for (int c = 0; c < 3; ++c) {
      const double residual = res.mean_bloch[k][c] - decay * res.initial_bloch[c];
      const double se = res.stderr_bloch[k][c];
      if (residual == 0.0) {
        report.z[k][c] = 0.0;
      } else if (!(se > 0.0)) {
        throw std::runtime_error(
            "compare_to_analytic: zero or undefined standard error with a "
            "nonzero residual");
      } else {
        report.z[k][c] = residual / se;
      }
      report.max_abs_z = std::max(report.max_abs_z, std::abs(report.z[k][c]));
    }
  }
  return report;
}

}  // namespace qchan
