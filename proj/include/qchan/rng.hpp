#pragma once

#include <cmath>
#include <cstdint>

#include "qchan/linalg.hpp"

namespace qchan {

// Stateless counter-based generator: the splitmix64 finalizer chained over
// (seed, k1, k2, k3). Every draw is addressed, so results do not depend on
// evaluation order or thread count.

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t k1,
                                  std::uint64_t k2, std::uint64_t k3) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ k1);
  h = mix64(h ^ k2);
  h = mix64(h ^ k3);
  return h;
}

/// Uniform draw in the open interval (0,1): ((bits>>11)+0.5) * 2^-53.
inline double uniform_open(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2,
                           std::uint64_t k3) {
  const std::uint64_t bits = counter_bits(seed, k1, k2, k3);
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal pair via Box-Muller from draws (k3, k3+1).
inline void gaussian_pair(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2,
                          std::uint64_t k3, double& z0, double& z1) {
  const double u1 = uniform_open(seed, k1, k2, k3);
  const double u2 = uniform_open(seed, k1, k2, k3 + 1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  z0 = r * std::cos(a);
  z1 = r * std::sin(a);
}

/// Three standard normals keyed by (seed, k1, k2); consumes draws 0..3.
inline Vec3 gaussian3(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2) {
  Vec3 z;
  double z3_unused;
  gaussian_pair(seed, k1, k2, 0, z[0], z[1]);
  gaussian_pair(seed, k1, k2, 2, z[2], z3_unused);
  return z;
}

}  // namespace qchan
