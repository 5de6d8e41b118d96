#include "qchan/entanglement.hpp"

#include <cmath>
#include <sstream>

namespace qchan {

namespace {

// Linear extension of the affine Bloch map to arbitrary 2x2 matrices via the
// Pauli expansion m = (c0*I + c.sigma)/2, c0 = tr m, c_k = tr(sigma_k m).
ComplexMatrix apply_to_matrix(const QubitChannel& ch, const ComplexMatrix& m) {
  const complexd c0 = trace(m);
  std::array<complexd, 3> c;
  for (int k = 1; k <= 3; ++k) c[k - 1] = trace(pauli(k) * m);

  std::array<complexd, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = c0 * ch.b[i];
    for (int j = 0; j < 3; ++j) out[i] += ch.a(i, j) * c[j];
  }

  ComplexMatrix r = ComplexMatrix::identity(2);
  r *= c0;
  for (int k = 1; k <= 3; ++k) r += out[k - 1] * pauli(k);
  r *= 0.5;
  return r;
}

ComplexMatrix basis_unit(int i, int j) {
  ComplexMatrix e(2);
  e(i, j) = 1.0;
  return e;
}

void check_density4(const ComplexMatrix& m, const char* who) {
  if (m.dim() != 4) throw std::invalid_argument(std::string(who) + ": dim must be 4");
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument(std::string(who) + ": not Hermitian within 1e-10");
  if (std::abs(trace(m) - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(who) + ": trace differs from 1");
  const auto spec = hermitian_eigenvalues(m);
  if (spec.eigenvalues.front() < -1e-10)
    throw std::invalid_argument(std::string(who) + ": negative eigenvalue beyond 1e-10");
}

}  // namespace

ChoiMatrix choi_of_channel(const QubitChannel& ch) {
  // (id (x) ch) |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2):
  // C = sum_ij |i><j| (x) ch(|i><j|) / 2.
  ComplexMatrix c(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c += tensor_product(basis_unit(i, j), apply_to_matrix(ch, basis_unit(i, j)));
  c *= 0.5;

  const auto spec = hermitian_eigenvalues(c);
  if (spec.eigenvalues.front() < -1e-10)
    throw std::runtime_error("choi_of_channel: channel is not completely positive");
  if (max_abs_diff(partial_trace_second(c),
                   complexd(0.5) * ComplexMatrix::identity(2)) > 1e-12)
    throw std::runtime_error("choi_of_channel: reference marginal is not I/2");
  return ChoiMatrix{std::move(c)};
}

ComplexMatrix apply_channel_to_first(const QubitChannel& ch, const ComplexMatrix& m) {
  if (m.dim() != 4)
    throw std::invalid_argument("apply_channel_to_first: dim must be 4");

  // Two-qubit Pauli expansion m = sum_{mu,nu} R(mu,nu) s_mu (x) s_nu / 4;
  // the channel acts on the first index only.
  auto sigma = [](int mu) {
    return mu == 0 ? ComplexMatrix::identity(2) : pauli(mu);
  };
  complexd r[4][4];
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      r[mu][nu] = trace(tensor_product(sigma(mu), sigma(nu)) * m);

  complexd rp[4][4];
  for (int nu = 0; nu < 4; ++nu) {
    rp[0][nu] = r[0][nu];
    for (int i = 1; i < 4; ++i) {
      rp[i][nu] = ch.b[i - 1] * r[0][nu];
      for (int j = 1; j < 4; ++j) rp[i][nu] += ch.a(i - 1, j - 1) * r[j][nu];
    }
  }

  ComplexMatrix out(4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      out += (0.25 * rp[mu][nu]) * tensor_product(sigma(mu), sigma(nu));
  return out;
}

EBVerdict ppt_verdict(const ComplexMatrix& m) {
  check_density4(m, "ppt_verdict");
  const ComplexMatrix pt = partial_transpose(m);
  const auto spec = hermitian_eigenvalues(pt);

  EBVerdict v{};
  v.min_pt_eigenvalue = spec.eigenvalues.front();
  // Sum of negative parts; equals (||pt||_1 - 1)/2 for unit-trace input but
  // comes out exactly zero on PSD spectra.
  double negativity = 0.0;
  for (double lambda : spec.eigenvalues) negativity += std::max(0.0, -lambda);
  v.negativity = negativity;
  v.is_entanglement_breaking = v.min_pt_eigenvalue >= -kSeparabilityTol;
  return v;
}

EBVerdict is_entanglement_breaking(const QubitChannel& ch) {
  return ppt_verdict(choi_of_channel(ch).m);
}

std::optional<double> disentanglement_time(const BlochGenerator& g, double t_max,
                                           double tol) {
  if (!(t_max > 0.0) || !(tol > 0.0))
    throw std::invalid_argument("disentanglement_time: t_max and tol must be > 0");

  auto eb_at = [&](double t) {
    return is_entanglement_breaking(channel_from_generator(g, t))
        .is_entanglement_breaking;
  };

  // Scan first: certify a single false->true transition before bisecting.
  constexpr int kScanPoints = 64;
  int first_true = -1;
  for (int i = 0; i <= kScanPoints; ++i) {
    const double t = t_max * i / kScanPoints;
    const bool eb = eb_at(t);
    if (eb && first_true < 0) first_true = i;
    if (!eb && first_true >= 0)
      throw NonMonotoneOnset(
          "disentanglement_time: EB verdict reverted to false after turning true");
  }
  if (first_true < 0) return std::nullopt;
  if (first_true == 0)
    throw NonMonotoneOnset("disentanglement_time: map is already EB at t = 0");

  double lo = t_max * (first_true - 1) / kScanPoints;  // not EB
  double hi = t_max * first_true / kScanPoints;        // EB
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (eb_at(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

HolevoForm holevo_form_depolarizing(double t, double tau) {
  if (!(tau > 0.0))
    throw std::invalid_argument("holevo_form_depolarizing: tau must be > 0");
  const double coeff = 3.0 * std::exp(-t / tau);
  if (coeff > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "holevo_form_depolarizing: the prepared states do not exist until "
           "3*exp(-t/tau) descends to 1 (currently "
        << coeff << ")";
    throw HolevoNotApplicable(msg.str());
  }

  HolevoForm form;
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int s = -1; s <= 1; s += 2) {
      ComplexMatrix p = ComplexMatrix::identity(2);
      p += complexd(static_cast<double>(s)) * pauli(alpha);
      p *= 1.0 / 6.0;

      ComplexMatrix rho = ComplexMatrix::identity(2);
      rho += complexd(s * coeff) * pauli(alpha);
      rho *= 0.5;
      form.entries.push_back(
          HolevoEntry{std::move(p), DensityMatrix2::from_matrix(rho)});
    }
  return form;
}

double verify_holevo_form(const HolevoForm& form, const QubitChannel& ch,
                          int n_samples, std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("verify_holevo_form: n_samples must be >= 1");
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const DensityMatrix2 rho = random_density_matrix2(seed, i);
    ComplexMatrix mixed(2);
    for (const auto& entry : form.entries) {
      const double p = trace(entry.povm_element * rho.matrix()).real();
      mixed += complexd(p) * entry.output_state.matrix();
    }
    worst = std::max(worst, trace_norm(mixed - apply_channel(ch, rho).matrix()));
  }
  return worst;
}

WernerState werner_state(double f) {
  if (f < -1.0 / 3.0 - 1e-12 || f > 1.0 + 1e-12)
    throw std::invalid_argument("werner_state: f must lie in [-1/3, 1]");
  ComplexMatrix m = tensor_product(ComplexMatrix::identity(2),
                                   ComplexMatrix::identity(2));
  for (int k = 1; k <= 3; ++k)
    m -= complexd(f) * tensor_product(pauli(k), pauli(k));
  m *= 0.25;
  return WernerState{f, std::move(m)};
}

WernerState evolve_singlet(double t, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("evolve_singlet: tau must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_singlet: t must be >= 0");
  return werner_state(std::exp(-t / tau));
}

ComplexMatrix singlet_projector() { return werner_state(1.0).m; }

}  // namespace qchan
