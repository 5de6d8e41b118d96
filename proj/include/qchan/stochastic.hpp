#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qchan/linalg.hpp"

namespace qchan {

/// Spin-1/2 wavefunction under the random-field Schroedinger equation,
/// advanced by exact unitary kicks exp(-i dW.sigma/2) with per-component
/// Gaussian increments of variance dt/tau.
struct SSEConfig {
  double tau = 1.0;
  double dt = 1e-3;
  double t_final = 3.0;
  long long n_traj = 10000;
  std::uint64_t seed = 1;
  std::array<complexd, 2> initial_state{complexd(1.0), complexd(0.0)};
  int sample_count = 10;  // uniform grid on [0, t_final], endpoints included
};

struct EnsembleResult {
  std::vector<double> times;
  std::vector<Vec3> mean_bloch;
  std::vector<Vec3> stderr_bloch;  // NaN components when n_traj < 2
  Vec3 initial_bloch{};
  long long n_traj = 0;
};

/// One exact rotation exp(-i dw.sigma/2) applied to psi; norm-preserving to
/// round-off.
std::array<complexd, 2> sse_kick(const std::array<complexd, 2>& psi, const Vec3& dw);

/// Bloch vectors of one trajectory at the sample times. Deterministic in
/// (cfg.seed, trajectory_index): increments come from a counter-based stream
/// keyed by (seed, trajectory, step).
std::vector<Vec3> run_trajectory(const SSEConfig& cfg, long long trajectory_index);

/// Ensemble mean and standard error, trajectories run in parallel when
/// OpenMP is enabled. The reduction always walks trajectories in index
/// order, so the result is bit-identical for any thread count.
EnsembleResult run_ensemble(const SSEConfig& cfg);

/// Plain-loop reference implementation; must match run_ensemble bit for bit.
EnsembleResult run_ensemble_serial(const SSEConfig& cfg);

struct ZScoreReport {
  std::vector<double> times;
  std::vector<Vec3> z;  // per component, (mean - e^{-t/tau} r0) / stderr
  double max_abs_z = 0.0;
};

/// Compare the ensemble mean against the isotropic-depolarization solution
/// e^{-t/tau} r(0). A zero standard error is only accepted where the
/// residual is exactly zero (e.g. at t = 0).
ZScoreReport compare_to_analytic(const EnsembleResult& res, double tau);

}  // namespace qchan
