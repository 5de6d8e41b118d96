#include "qchan/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qchan/entanglement.hpp"

namespace qchan {

std::vector<SweepRow> compute_sweep(const ChannelFamily& family, double t_max,
                                    int steps) {
  if (steps < 2) throw std::invalid_argument("compute_sweep: steps must be >= 2");
  if (!(t_max > 0.0)) throw std::invalid_argument("compute_sweep: t_max must be > 0");

  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const Vec3 probe{{inv_sqrt3, inv_sqrt3, inv_sqrt3}};

  std::vector<SweepRow> rows(steps);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * i / (steps - 1);
    const QubitChannel ch = family(t);
    const ChoiMatrix choi = choi_of_channel(ch);
    const EBVerdict verdict = ppt_verdict(choi.m);
    rows[i] = SweepRow{t,
                       (ch.a * probe + ch.b).norm(),
                       hermitian_eigenvalues(choi.m).eigenvalues.front(),
                       verdict.min_pt_eigenvalue,
                       verdict.negativity,
                       verdict.is_entanglement_breaking};
  }
  return rows;
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace qchan
