#include "qchan/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qchan {

DensityMatrix2 DensityMatrix2::from_matrix(const ComplexMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("DensityMatrix2: dim must be 2");
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("DensityMatrix2: not Hermitian within 1e-10");
  if (std::abs(trace(m) - 1.0) > 1e-12)
    throw std::invalid_argument("DensityMatrix2: trace differs from 1 beyond 1e-12");
  const auto spec = hermitian_eigenvalues(m);
  if (spec.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("DensityMatrix2: negative eigenvalue beyond 1e-10");
  return DensityMatrix2(m);
}

DensityMatrix2 density_from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + 1e-10)
    throw std::invalid_argument("density_from_bloch: |r| > 1, unphysical");
  ComplexMatrix m = ComplexMatrix::identity(2);
  for (int k = 1; k <= 3; ++k) m += complexd(r[k - 1]) * pauli(k);
  m *= 0.5;
  return DensityMatrix2::from_matrix(m);
}

BlochVector bloch_from_density(const DensityMatrix2& rho) {
  BlochVector r;
  for (int k = 1; k <= 3; ++k) r[k - 1] = trace(pauli(k) * rho.matrix()).real();
  return r;
}

QubitChannel identity_channel() { return QubitChannel{Mat3::identity(), {}}; }

QubitChannel depolarizing_channel(double t, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("depolarizing_channel: tau must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("depolarizing_channel: t must be >= 0");
  const double f = std::exp(-t / tau);
  QubitChannel ch;
  ch.a(0, 0) = ch.a(1, 1) = ch.a(2, 2) = f;
  return ch;
}

QubitChannel dephasing_channel(double t, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("dephasing_channel: gamma must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("dephasing_channel: t must be >= 0");
  const double f = std::exp(-gamma * t);
  QubitChannel ch;
  ch.a(0, 0) = ch.a(1, 1) = f;
  ch.a(2, 2) = 1.0;
  return ch;
}

QubitChannel dephasing_channel_literal(double t, double tau) {
  if (!(tau > 0.0))
    throw std::invalid_argument("dephasing_channel_literal: tau must be > 0");
  return dephasing_channel(t, 4.0 / tau);
}

DensityMatrix2 apply_channel(const QubitChannel& ch, const DensityMatrix2& rho) {
  const BlochVector out = ch.a * bloch_from_density(rho) + ch.b;
  if (out.norm() > 1.0 + 1e-10)
    throw std::runtime_error(
        "apply_channel: output leaves the Bloch ball (channel is not CP)");
  return density_from_bloch(out);
}

QubitChannel compose(const QubitChannel& ch2, const QubitChannel& ch1) {
  return QubitChannel{ch2.a * ch1.a, ch2.a * ch1.b + ch2.b};
}

ComplexMatrix JumpOperator::to_matrix() const {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m *= c0;
  m += c1 * pauli(1);
  m += c2 * pauli(2);
  m += c3 * pauli(3);
  return m;
}

namespace {

// Master-equation action on a single basis matrix.
ComplexMatrix lindblad_action(const LindbladGenerator& gen, const ComplexMatrix& b) {
  ComplexMatrix h(2);
  for (int k = 1; k <= 3; ++k) h += complexd(0.5 * gen.h[k - 1]) * pauli(k);
  ComplexMatrix out = complexd(0, -1) * (h * b - b * h);
  for (const auto& jump : gen.jumps) {
    const ComplexMatrix l = jump.to_matrix();
    const ComplexMatrix ld = adjoint(l);
    const ComplexMatrix ldl = ld * l;
    out += complexd(jump.rate) *
           (l * b * ld - complexd(0.5) * (ldl * b + b * ldl));
  }
  return out;
}

}  // namespace

BlochGenerator bloch_generator_from_lindblad(const LindbladGenerator& gen) {
  for (const auto& jump : gen.jumps)
    if (!(jump.rate >= 0.0))
      throw std::invalid_argument("bloch_generator_from_lindblad: negative rate");

  // rho = (B0 + sum r_k B_k)/2 with B0 = I, B_k = sigma_k, so
  // dr_nu/dt = tr(sigma_nu L rho) = sum_mu g(nu,mu) (1,r)_mu with
  // g(nu,mu) = tr(sigma_nu L B_mu)/2.
  BlochGenerator out;
  for (int mu = 0; mu <= 3; ++mu) {
    const ComplexMatrix basis = mu == 0 ? ComplexMatrix::identity(2) : pauli(mu);
    const ComplexMatrix image = lindblad_action(gen, basis);
    for (int nu = 1; nu <= 3; ++nu)
      out.g(nu, mu) = 0.5 * trace(pauli(nu) * image).real();
  }
  // First row stays exactly zero: the semigroup preserves trace.
  return out;
}

QubitChannel channel_from_generator(const BlochGenerator& g, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("channel_from_generator: t must be >= 0");
  const Mat4 m = matrix_exp_real(g.g, t);
  QubitChannel ch;
  for (int i = 0; i < 3; ++i) {
    ch.b[i] = m(i + 1, 0);
    for (int j = 0; j < 3; ++j) ch.a(i, j) = m(i + 1, j + 1);
  }
  return ch;
}

BlochGenerator depolarizing_generator(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("depolarizing_generator: tau must be > 0");
  BlochGenerator g;
  g.g(1, 1) = g.g(2, 2) = g.g(3, 3) = -1.0 / tau;
  return g;
}

BlochGenerator dephasing_generator(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("dephasing_generator: gamma must be > 0");
  BlochGenerator g;
  g.g(1, 1) = g.g(2, 2) = -gamma;
  return g;
}

}  // namespace qchan
