#include "qchan/random_states.hpp"

#include "qchan/rng.hpp"

namespace qchan {

namespace {

// Distinct stream tags keep the 2x2 and 4x4 samplers decorrelated even when
// called with the same (seed, index).
constexpr std::uint64_t kTag2 = 0x71c2u;
constexpr std::uint64_t kTag4 = 0x71c4u;

ComplexMatrix ginibre(std::uint64_t seed, std::uint64_t index, int dim,
                      std::uint64_t tag) {
  ComplexMatrix g(dim);
  std::uint64_t draw = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double re, im;
      gaussian_pair(seed ^ tag, index, i * dim + j, draw, re, im);
      g(i, j) = complexd(re, im);
      draw += 2;
    }
  return g;
}

ComplexMatrix normalized_gram(const ComplexMatrix& g) {
  ComplexMatrix rho = g * adjoint(g);
  rho *= 1.0 / trace(rho).real();
  // Force exact Hermiticity; the product is Hermitian up to round-off.
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = i + 1; j < rho.dim(); ++j) {
      const complexd avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = avg;
      rho(j, i) = std::conj(avg);
    }
  return rho;
}

}  // namespace

DensityMatrix2 random_density_matrix2(std::uint64_t seed, std::uint64_t index) {
  return DensityMatrix2::from_matrix(normalized_gram(ginibre(seed, index, 2, kTag2)));
}

ComplexMatrix random_density_matrix4(std::uint64_t seed, std::uint64_t index) {
  return normalized_gram(ginibre(seed, index, 4, kTag4));
}

}  // namespace qchan
