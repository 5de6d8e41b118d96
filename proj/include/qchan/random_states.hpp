#pragma once

#include <cstdint>

#include "qchan/channels.hpp"

namespace qchan {

/// Fixed seed used by the verification samplers so that property checks are
/// reproducible run to run.
inline constexpr std::uint64_t kStateSampleSeed = 0x243F6A8885A308D3ull;

/// Hilbert-Schmidt-style sample: G with iid standard complex Gaussian
/// entries, rho = G G+ / tr(G G+).
DensityMatrix2 random_density_matrix2(std::uint64_t seed, std::uint64_t index);

/// Same construction on two qubits; returned as a plain 4x4 matrix.
ComplexMatrix random_density_matrix4(std::uint64_t seed, std::uint64_t index);

}  // namespace qchan
