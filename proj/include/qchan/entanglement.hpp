#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/random_states.hpp"

namespace qchan {

/// State-normalized Choi matrix (id (x) channel) |Phi+><Phi+| of a qubit
/// channel; trace 1, reference marginal I/2.
struct ChoiMatrix {
  ComplexMatrix m;
};

/// Eigenvalue threshold shared by every separability verdict in the project.
inline constexpr double kSeparabilityTol = 1e-10;

ChoiMatrix choi_of_channel(const QubitChannel& ch);

/// Extend the channel to act on the first factor of a two-qubit state,
/// identity on the second.
ComplexMatrix apply_channel_to_first(const QubitChannel& ch, const ComplexMatrix& m);

struct EBVerdict {
  bool is_entanglement_breaking;
  double min_pt_eigenvalue;
  double negativity;
};

/// Peres-Horodecki test: exact in 2x2 dimensions. `m` must be a valid
/// two-qubit density matrix.
EBVerdict ppt_verdict(const ComplexMatrix& m);

EBVerdict is_entanglement_breaking(const QubitChannel& ch);

/// Thrown when the sampled EB verdict flips more than once in [0, t_max].
class NonMonotoneOnset : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest t in [0, t_max] at which exp(g t) is entanglement breaking,
/// bisected to within tol after a 64-point scan certifies a single
/// false->true transition. Empty when the map is still entangling at t_max.
std::optional<double> disentanglement_time(const BlochGenerator& g, double t_max,
                                           double tol);

struct HolevoEntry {
  ComplexMatrix povm_element;
  DensityMatrix2 output_state;
};

/// Measure-and-prepare form: M rho = sum tr[P rho] * rho_out over entries.
struct HolevoForm {
  std::vector<HolevoEntry> entries;
};

/// Thrown when the requested decomposition does not exist (the prepared
/// states would have a negative eigenvalue).
class HolevoNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Six-element decomposition of the depolarizing channel: P = (I + s*s_a)/6,
/// rho_out = (I + 3 s e^{-t/tau} s_a)/2 for a in {1,2,3}, s = +-1. Only
/// exists once 3 e^{-t/tau} <= 1.
HolevoForm holevo_form_depolarizing(double t, double tau);

/// Max trace-norm residual of the form against the channel over n_samples
/// reproducibly drawn random states.
double verify_holevo_form(const HolevoForm& form, const QubitChannel& ch,
                          int n_samples, std::uint64_t seed = kStateSampleSeed);

/// Two-qubit state (I(x)I - f sigma(x)sigma)/4; a density matrix for
/// f in [-1/3, 1], entangled iff f > 1/3.
struct WernerState {
  double f;
  ComplexMatrix m;
};

WernerState werner_state(double f);

/// Singlet evolved under local isotropic depolarization of the first qubit:
/// Werner state with f = e^{-t/tau}.
WernerState evolve_singlet(double t, double tau);

ComplexMatrix singlet_projector();

}  // namespace qchan
