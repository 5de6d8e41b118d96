#pragma once

#include <vector>

#include "qchan/linalg.hpp"

namespace qchan {

/// Bloch coordinates r of a qubit state rho = (I + r.sigma)/2.
using BlochVector = Vec3;

/// Validated 2x2 density matrix: Hermitian within 1e-10, unit trace within
/// 1e-12, smallest eigenvalue >= -1e-10.
class DensityMatrix2 {
 public:
  static DensityMatrix2 from_matrix(const ComplexMatrix& m);
  const ComplexMatrix& matrix() const { return m_; }

 private:
  explicit DensityMatrix2(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

DensityMatrix2 density_from_bloch(const BlochVector& r);
BlochVector bloch_from_density(const DensityMatrix2& rho);

/// Qubit channel in affine Bloch form: r -> a*r + b. Trace preservation is
/// structural; complete positivity is checked where the Choi matrix is built.
struct QubitChannel {
  Mat3 a;
  Vec3 b{};
};

QubitChannel identity_channel();

/// Isotropic depolarization: a = exp(-t/tau) * I, b = 0.
QubitChannel depolarizing_channel(double t, double tau);

/// Continuous sigma_3 measurement: a = diag(e^{-gamma t}, e^{-gamma t}, 1).
QubitChannel dephasing_channel(double t, double gamma);

/// Same map with the transverse rate fixed to 4/tau, the value the
/// double-commutator form -(1/tau)[s3,[s3,rho]] produces.
QubitChannel dephasing_channel_literal(double t, double tau);

DensityMatrix2 apply_channel(const QubitChannel& ch, const DensityMatrix2& rho);

/// ch2 after ch1.
QubitChannel compose(const QubitChannel& ch2, const QubitChannel& ch1);

/// Jump operator L = c0*I + c1*s1 + c2*s2 + c3*s3 entering the master
/// equation at the given nonnegative rate.
struct JumpOperator {
  complexd c0, c1, c2, c3;
  double rate = 0.0;
  ComplexMatrix to_matrix() const;
};

/// Semigroup generator: Hamiltonian H = h.sigma/2 plus weighted jumps.
struct LindbladGenerator {
  Vec3 h{};
  std::vector<JumpOperator> jumps;
};

/// Generator in Bloch transfer form: d(1,r)/dt = g * (1,r). The first row
/// is identically zero (trace preservation).
struct BlochGenerator {
  Mat4 g;
};

/// Transfer-space image of drho/dt = -i[H,rho] + sum rate*(L rho L+ - {L+L,rho}/2).
BlochGenerator bloch_generator_from_lindblad(const LindbladGenerator& gen);

/// exp(g*t) read back as an affine channel.
QubitChannel channel_from_generator(const BlochGenerator& g, double t);

/// Built-in generators matching the closed-form channels above.
BlochGenerator depolarizing_generator(double tau);
BlochGenerator dephasing_generator(double gamma);

}  // namespace qchan
