// Times the OpenMP trajectory ensemble against the serial reference and
// confirms the two reductions agree bit for bit.
//
//   bench_ensemble [n_traj] [dt]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qchan/stochastic.hpp"

using namespace qchan;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

bool identical(const EnsembleResult& a, const EnsembleResult& b) {
  for (size_t k = 0; k < a.times.size(); ++k)
    for (int c = 0; c < 3; ++c)
      if (a.mean_bloch[k][c] != b.mean_bloch[k][c] ||
          a.stderr_bloch[k][c] != b.stderr_bloch[k][c])
        return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  SSEConfig cfg;
  cfg.tau = 1.0;
  cfg.dt = 1e-3;
  cfg.t_final = 3.0;
  cfg.n_traj = 10000;
  cfg.seed = 42;
  if (argc > 1) cfg.n_traj = std::atoll(argv[1]);
  if (argc > 2) cfg.dt = std::atof(argv[2]);

  const long long kicks = cfg.n_traj * std::llround(cfg.t_final / cfg.dt);
  std::printf("%lld trajectories x %lld steps (%lld kicks)\n", cfg.n_traj,
              std::llround(cfg.t_final / cfg.dt), kicks);
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled in this build\n");
#endif

  auto start = std::chrono::steady_clock::now();
  const EnsembleResult serial = run_ensemble_serial(cfg);
  const double t_serial = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const EnsembleResult parallel = run_ensemble(cfg);
  const double t_parallel = seconds_since(start);

  std::printf("serial   : %.3f s  (%.1f Mkick/s)\n", t_serial,
              kicks / t_serial / 1e6);
  std::printf("parallel : %.3f s  (%.1f Mkick/s)\n", t_parallel,
              kicks / t_parallel / 1e6);
  std::printf("speedup  : %.2fx\n", t_serial / t_parallel);

  if (!identical(serial, parallel)) {
    std::printf("MISMATCH: serial and parallel reductions disagree\n");
    return 1;
  }
  std::printf("results identical bit for bit; mean r3(t_final) = %.6f\n",
              serial.mean_bloch.back()[2]);
  return 0;
}
