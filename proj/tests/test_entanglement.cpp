#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qchan/entanglement.hpp"

using namespace qchan;

namespace {

const double kLn3 = std::log(3.0);

}  // namespace

TEST_CASE("choi matrices of the named channels") {
  // Identity channel: the maximally entangled reference itself.
  const ChoiMatrix id = choi_of_channel(identity_channel());
  const auto id_spec = hermitian_eigenvalues(id.m);
  CHECK(id_spec.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(id_spec.eigenvalues[2] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(id_spec.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(id.m(0, 0) == complexd(0.5));
  CHECK(id.m(0, 3) == complexd(0.5));

  // Full depolarization: product of maximally mixed states.
  QubitChannel crush;
  CHECK(max_abs_diff(choi_of_channel(crush).m,
                     complexd(0.25) * ComplexMatrix::identity(4)) < 1e-15);

  // Depolarizing factor f: spectrum {(1-f)/4 x3, (1+3f)/4}.
  for (double f : {0.9, 0.5, 1.0 / 3.0, 0.1}) {
    const ChoiMatrix c = choi_of_channel(depolarizing_channel(-std::log(f), 1.0));
    const auto spec = hermitian_eigenvalues(c.m);
    for (int k = 0; k < 3; ++k)
      CHECK(spec.eigenvalues[k] == doctest::Approx((1.0 - f) / 4.0).epsilon(1e-12));
    CHECK(spec.eigenvalues[3] ==
          doctest::Approx((1.0 + 3.0 * f) / 4.0).epsilon(1e-12));
    CHECK(max_abs_diff(partial_trace_second(c.m),
                       complexd(0.5) * ComplexMatrix::identity(2)) < 1e-12);
  }

  QubitChannel not_cp;
  not_cp.a(0, 0) = 1.0;
  not_cp.a(1, 1) = 1.0;
  not_cp.a(2, 2) = -1.0;  // transpose map
  CHECK_THROWS_AS((void)choi_of_channel(not_cp), std::runtime_error);
}

TEST_CASE("ppt verdicts") {
  const EBVerdict singlet = ppt_verdict(singlet_projector());
  CHECK(singlet.min_pt_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(singlet.negativity == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(singlet.is_entanglement_breaking);

  const EBVerdict mixed =
      ppt_verdict(complexd(0.25) * ComplexMatrix::identity(4));
  CHECK(mixed.min_pt_eigenvalue == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(mixed.negativity == 0.0);
  CHECK(mixed.is_entanglement_breaking);

  // Werner boundary f = 1/3 counts as separable.
  const EBVerdict boundary = ppt_verdict(werner_state(1.0 / 3.0).m);
  CHECK(boundary.min_pt_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(boundary.is_entanglement_breaking);

  // Not a density matrix: wrong trace.
  CHECK_THROWS_AS((void)ppt_verdict(ComplexMatrix::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("entanglement breaking onset of the named channels") {
  CHECK_FALSE(is_entanglement_breaking(depolarizing_channel(0.0, 1.0))
                  .is_entanglement_breaking);
  CHECK(is_entanglement_breaking(depolarizing_channel(2.0, 1.0))
            .is_entanglement_breaking);

  // The measurement channel never breaks entanglement at finite time; its
  // Choi PT bottom eigenvalue is -e^{-gamma t}/2, resolvable against the
  // 1e-10 verdict tolerance out to roughly 22 tau.
  for (double t : {0.5, 1.0, 5.0, 10.0, 20.0}) {
    const EBVerdict v = is_entanglement_breaking(dephasing_channel(t, 1.0));
    CHECK_FALSE(v.is_entanglement_breaking);
    CHECK(v.min_pt_eigenvalue ==
          doctest::Approx(-0.5 * std::exp(-t)).epsilon(1e-9));
    CHECK_FALSE(is_entanglement_breaking(dephasing_channel_literal(t / 4.0, 1.0))
                    .is_entanglement_breaking);
  }

  // Verdicts never revert along either semigroup.
  bool seen_eb = false;
  for (int i = 0; i <= 200; ++i) {
    const double t = 3.0 * i / 200;
    const bool eb = is_entanglement_breaking(depolarizing_channel(t, 1.0))
                        .is_entanglement_breaking;
    if (seen_eb) CHECK(eb);
    seen_eb = eb;
    CHECK_FALSE(is_entanglement_breaking(dephasing_channel(t, 1.0))
                    .is_entanglement_breaking);
  }
  CHECK(seen_eb);
}

TEST_CASE("disentanglement time") {
  // The bisection-located boundary sits within 1e-9 of tau*ln3 (the 1e-10
  // verdict tolerance shifts it by ~4e-10).
  const auto t_star =
      disentanglement_time(depolarizing_generator(1.0), 20.0, 1e-10);
  REQUIRE(t_star.has_value());
  CHECK(std::abs(*t_star - kLn3) < 1e-9);

  // tau scaling
  const auto scaled = disentanglement_time(depolarizing_generator(2.0), 40.0, 1e-9);
  REQUIRE(scaled.has_value());
  CHECK(std::abs(*scaled - 2.0 * kLn3) < 2e-6);

  // Measurement channel: still entangling at the default horizon.
  CHECK_FALSE(disentanglement_time(dephasing_generator(1.0), 20.0, 1e-9)
                  .has_value());
}

TEST_CASE("holevo form of the depolarizing channel") {
  // At threshold the prepared states are completely polarized (pure).
  const HolevoForm at = holevo_form_depolarizing(kLn3, 1.0);
  REQUIRE(at.entries.size() == 6);
  for (const auto& entry : at.entries) {
    const auto spec = hermitian_eigenvalues(entry.output_state.matrix());
    CHECK(spec.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(spec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(verify_holevo_form(at, depolarizing_channel(kLn3, 1.0), 100) <= 1e-12);
  CHECK(verify_holevo_form(holevo_form_depolarizing(2.0, 1.0),
                           depolarizing_channel(2.0, 1.0), 100) <= 1e-12);

  // Deep decoherence: all six prepared states collapse onto I/2.
  const HolevoForm deep = holevo_form_depolarizing(10.0, 1.0);
  for (const auto& entry : deep.entries)
    CHECK(max_abs_diff(entry.output_state.matrix(),
                       complexd(0.5) * ComplexMatrix::identity(2)) < 1e-4);
  CHECK(verify_holevo_form(deep, depolarizing_channel(10.0, 1.0), 100) <= 1e-12);

  // POVM completeness at 1e-13 on a grid of times.
  for (int i = 0; i < 20; ++i) {
    const double t = kLn3 + (5.0 - kLn3) * i / 19;
    const HolevoForm form = holevo_form_depolarizing(t, 1.0);
    ComplexMatrix sum(2);
    for (const auto& entry : form.entries) sum += entry.povm_element;
    CHECK(max_abs_diff(sum, ComplexMatrix::identity(2)) <= 1e-13);
    CHECK(verify_holevo_form(form, depolarizing_channel(t, 1.0), 100) <= 1e-12);
  }

  // Below threshold the construction must refuse.
  CHECK_THROWS_AS((void)holevo_form_depolarizing(0.9 * kLn3, 1.0),
                  HolevoNotApplicable);
  CHECK_THROWS_AS((void)holevo_form_depolarizing(0.5, 1.0), HolevoNotApplicable);

  // A mismatched channel leaves a visible residual.
  const double off = verify_holevo_form(holevo_form_depolarizing(2.0, 1.0),
                                        depolarizing_channel(3.0, 1.0), 100);
  CHECK(off > 1e-3);
}

TEST_CASE("singlet evolution") {
  const WernerState start = evolve_singlet(0.0, 1.0);
  CHECK(start.f == 1.0);
  CHECK(max_abs_diff(start.m, singlet_projector()) == 0.0);
  CHECK(ppt_verdict(start.m).negativity == doctest::Approx(0.5).epsilon(1e-12));

  // Threshold coincidence: negativity hits zero exactly where the channel
  // verdict flips.
  const WernerState at = evolve_singlet(kLn3, 1.0);
  CHECK(at.f == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(ppt_verdict(at.m).min_pt_eigenvalue ==
        doctest::Approx(0.0).epsilon(1e-13));

  const WernerState late = evolve_singlet(2.0 * kLn3, 1.0);
  CHECK(late.f == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  const EBVerdict v = ppt_verdict(late.m);
  CHECK(v.is_entanglement_breaking);
  CHECK(v.negativity == 0.0);

  // Same state through the local-channel extension of the depolarizer.
  for (double t : {0.0, 0.3, 1.0, kLn3, 2.5}) {
    const ComplexMatrix via_channel = apply_channel_to_first(
        depolarizing_channel(t, 1.0), singlet_projector());
    CHECK(max_abs_diff(via_channel, evolve_singlet(t, 1.0).m) < 1e-12);
  }

  // PT bottom eigenvalue of the Werner family: (1-3f)/4.
  for (double t : {0.2, 0.8, 1.5, 3.0}) {
    const WernerState w = evolve_singlet(t, 1.0);
    CHECK(ppt_verdict(w.m).min_pt_eigenvalue ==
          doctest::Approx((1.0 - 3.0 * w.f) / 4.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS((void)evolve_singlet(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)werner_state(1.5), std::invalid_argument);
}

TEST_CASE("choi construction agrees with the two-qubit channel extension") {
  // Feeding |Phi+><Phi+| through (ch (x) id)... here (id (x) ch) on the
  // first-factor extension mirrored across the symmetric reference state:
  // both code paths must produce the same matrix, including for non-unital
  // channels (amplitude damping has b != 0).
  ComplexMatrix phi_plus(4);
  phi_plus(0, 0) = phi_plus(0, 3) = phi_plus(3, 0) = phi_plus(3, 3) = 0.5;

  auto amplitude_damping = [](double p) {
    QubitChannel ch;
    ch.a(0, 0) = ch.a(1, 1) = std::sqrt(1.0 - p);
    ch.a(2, 2) = 1.0 - p;
    ch.b[2] = p;
    return ch;
  };

  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    const QubitChannel ch = amplitude_damping(p);
    // apply_channel_to_first acts on the first factor; the Choi convention
    // keeps the first factor untouched. |Phi+> is invariant under swapping
    // the two factors, so compare against the swapped Choi matrix.
    const ComplexMatrix via_extension = apply_channel_to_first(ch, phi_plus);
    const ComplexMatrix choi = choi_of_channel(ch).m;
    ComplexMatrix swapped(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            swapped(k * 2 + i, l * 2 + j) = choi(i * 2 + k, j * 2 + l);
    CHECK(max_abs_diff(via_extension, swapped) < 1e-13);
  }

  for (double t : {0.2, 1.0, 3.0}) {
    const QubitChannel ch = depolarizing_channel(t, 1.0);
    const ComplexMatrix via_extension = apply_channel_to_first(ch, phi_plus);
    // Unital diagonal channels give a swap-symmetric Choi matrix.
    CHECK(max_abs_diff(via_extension, choi_of_channel(ch).m) < 1e-13);
  }
}

TEST_CASE("choi marginal is I/2 for semigroup channels") {
  // Random Lindblad semigroups, random times; choi_of_channel validates the
  // reference marginal internally, so surviving construction is the check.
  for (int i = 0; i < 50; ++i) {
    LindbladGenerator gen;
    auto u = [&](int j) {
      return std::cos(1.7 * i + 0.9 * j);  // cheap deterministic spread
    };
    gen.h = Vec3{{u(0), u(1), u(2)}};
    gen.jumps.push_back(JumpOperator{complexd(u(3), u(4)), complexd(u(5), u(6)),
                                     complexd(u(7), u(8)), complexd(u(9), u(10)),
                                     0.2 + 0.1 * std::abs(u(11))});
    const QubitChannel ch = channel_from_generator(
        bloch_generator_from_lindblad(gen), 0.1 + std::abs(u(12)));
    const ChoiMatrix c = choi_of_channel(ch);
    CHECK(max_abs_diff(partial_trace_second(c.m),
                       complexd(0.5) * ComplexMatrix::identity(2)) < 1e-12);
  }
}

TEST_CASE("negativity and min-PT verdicts agree on random states") {
  int entangled = 0;
  for (int i = 0; i < 1000; ++i) {
    const ComplexMatrix rho = random_density_matrix4(kStateSampleSeed, i);
    const EBVerdict v = ppt_verdict(rho);
    CHECK((v.negativity < 1e-10) == (v.min_pt_eigenvalue >= -1e-10));
    // The pinned formula (||PT||_1 - 1)/2 and the negative-part sum agree.
    const double via_norm =
        0.5 * (trace_norm(partial_transpose(rho)) - 1.0);
    CHECK(std::abs(std::max(0.0, via_norm) - v.negativity) < 1e-12);
    if (!v.is_entanglement_breaking) ++entangled;
  }
  // The Hilbert-Schmidt ensemble produces both kinds.
  CHECK(entangled > 100);
  CHECK(entangled < 900);
}
