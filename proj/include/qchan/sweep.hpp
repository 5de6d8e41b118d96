#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qchan/channels.hpp"

namespace qchan {

/// One time point of a channel-family sweep. bloch_norm is the Bloch norm of
/// the image of the pure probe state (1,1,1)/sqrt(3); the remaining columns
/// describe the Choi matrix at that time.
struct SweepRow {
  double t;
  double bloch_norm;
  double choi_min_eig;
  double pt_min_eig;
  double negativity;
  bool is_eb;
};

using ChannelFamily = std::function<QubitChannel(double)>;

/// Evaluate the family on a uniform grid of `steps` points covering
/// [0, t_max]. Rows are independent and computed in parallel when OpenMP is
/// enabled; the output order is the grid order either way.
std::vector<SweepRow> compute_sweep(const ChannelFamily& family, double t_max,
                                    int steps);

/// Shortest representation with 17 significant digits; round-trips doubles.
std::string format_g17(double x);

}  // namespace qchan
