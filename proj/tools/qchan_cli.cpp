// qchan: channel construction, entanglement-breaking analysis, Holevo
// decompositions, and Monte Carlo unraveling for a decohering qubit.
//
// Exit codes: 0 success, 1 usage, 2 numerical/config failure,
//             3 threshold not found, 4 Holevo construction inapplicable.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qchan/entanglement.hpp"
#include "qchan/generator_spec.hpp"
#include "qchan/stochastic.hpp"
#include "qchan/sweep.hpp"

namespace {

using namespace qchan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitHolevo = 4;

struct ChannelSelection {
  std::string channel = "depolarizing";
  std::string spec_path;
  double tau = 1.0;
  double gamma = 0.0;  // 0: default to 1/tau for the dephasing channel
};

void add_channel_options(CLI::App* cmd, ChannelSelection* sel) {
  cmd->add_option("--channel", sel->channel, "built-in channel family")
      ->check(CLI::IsMember({"depolarizing", "dephasing", "dephasing-literal"}))
      ->capture_default_str();
  cmd->add_option("--spec", sel->spec_path,
                  "generator spec file (overrides --channel)");
  cmd->add_option("--tau", sel->tau, "decoherence time scale")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--gamma", sel->gamma,
                  "dephasing rate (default 1/tau when omitted)")
      ->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double dephasing_rate(const ChannelSelection& sel) {
  return sel.gamma > 0.0 ? sel.gamma : 1.0 / sel.tau;
}

BlochGenerator make_generator(const ChannelSelection& sel) {
  if (!sel.spec_path.empty())
    return bloch_generator_from_lindblad(
        parse_generator_spec(read_file(sel.spec_path)));
  if (sel.channel == "depolarizing") return depolarizing_generator(sel.tau);
  if (sel.channel == "dephasing") return dephasing_generator(dephasing_rate(sel));
  return dephasing_generator(4.0 / sel.tau);  // dephasing-literal
}

ChannelFamily make_family(const ChannelSelection& sel) {
  if (!sel.spec_path.empty()) {
    const BlochGenerator g = make_generator(sel);
    return [g](double t) { return channel_from_generator(g, t); };
  }
  if (sel.channel == "depolarizing") {
    const double tau = sel.tau;
    return [tau](double t) { return depolarizing_channel(t, tau); };
  }
  const double gamma = sel.channel == "dephasing" ? dephasing_rate(sel)
                                                  : 4.0 / sel.tau;
  return [gamma](double t) { return dephasing_channel(t, gamma); };
}

int run_disentangle(const ChannelSelection& sel, double t_max, double tol) {
  const auto found = disentanglement_time(make_generator(sel), t_max, tol);
  if (!found) {
    std::printf("no entanglement-breaking time found in [0, %.17g]\n", t_max);
    return kExitNotFound;
  }
  std::printf("t* = %.15g\n", *found);
  if (sel.spec_path.empty() && sel.channel == "depolarizing")
    std::printf("analytic tau*ln3 = %.15g\n", sel.tau * std::log(3.0));
  return kExitOk;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "t,bloch_norm,choi_min_eig,pt_min_eig,negativity,is_eb\n";
  for (const auto& row : rows)
    out << format_g17(row.t) << ',' << format_g17(row.bloch_norm) << ','
        << format_g17(row.choi_min_eig) << ',' << format_g17(row.pt_min_eig)
        << ',' << format_g17(row.negativity) << ',' << (row.is_eb ? 1 : 0)
        << '\n';
}

int run_sweep(const ChannelSelection& sel, double t_max, int steps,
              const std::string& out_path) {
  const auto rows = compute_sweep(make_family(sel), t_max, steps);
  if (out_path.empty()) {
    write_sweep_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    write_sweep_csv(out, rows);
    if (!out.good()) throw std::runtime_error("write failed on '" + out_path + "'");
    std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), out_path.c_str());
  }
  return kExitOk;
}

void print_2x2(const char* label, const ComplexMatrix& m) {
  std::printf("  %s = [[%+.6f%+.6fi, %+.6f%+.6fi], [%+.6f%+.6fi, %+.6f%+.6fi]]\n",
              label, m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(),
              m(0, 1).imag(), m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(),
              m(1, 1).imag());
}

int run_holevo(double t, double tau) {
  HolevoForm form;
  try {
    form = holevo_form_depolarizing(t, tau);
  } catch (const HolevoNotApplicable& e) {
    std::printf("%s\n", e.what());
    return kExitHolevo;
  }

  const double coeff = 3.0 * std::exp(-t / tau);
  std::printf("measure-and-prepare form of the depolarizing channel\n");
  std::printf("t = %.15g, tau = %.15g, 3*exp(-t/tau) = %.15g\n", t, tau, coeff);
  static const char* axis = "xyz";
  int idx = 0;
  for (int alpha = 0; alpha < 3; ++alpha)
    for (int s = 0; s < 2; ++s, ++idx) {
      std::printf("[%c,%c]\n", axis[alpha], s == 0 ? '-' : '+');
      print_2x2("P  ", form.entries[idx].povm_element);
      print_2x2("rho", form.entries[idx].output_state.matrix());
    }

  const double residual =
      verify_holevo_form(form, depolarizing_channel(t, tau), 100);
  std::printf("verification residual over 100 random states: %.3g\n", residual);
  return residual <= 1e-12 ? kExitOk : kExitFailure;
}

int run_montecarlo(const SSEConfig& cfg, const std::string& out_path) {
  const EnsembleResult res = run_ensemble(cfg);
  const ZScoreReport rep = compare_to_analytic(res, cfg.tau);

  std::ostringstream csv;
  csv << "t,mean_r1,mean_r2,mean_r3,stderr_r1,stderr_r2,stderr_r3,analytic_norm\n";
  for (size_t k = 0; k < res.times.size(); ++k) {
    csv << format_g17(res.times[k]);
    for (int c = 0; c < 3; ++c) csv << ',' << format_g17(res.mean_bloch[k][c]);
    for (int c = 0; c < 3; ++c) csv << ',' << format_g17(res.stderr_bloch[k][c]);
    csv << ',' << format_g17(std::exp(-res.times[k] / cfg.tau)) << '\n';
  }

  std::FILE* summary = stdout;
  if (out_path.empty()) {
    std::fputs(csv.str().c_str(), stdout);
    summary = stderr;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << csv.str();
    if (!out.good()) throw std::runtime_error("write failed on '" + out_path + "'");
  }
  std::fprintf(summary,
               "%lld trajectories, dt = %g, seed = %llu: max |z| = %.3f "
               "(threshold 4)\n",
               cfg.n_traj, cfg.dt, static_cast<unsigned long long>(cfg.seed),
               rep.max_abs_z);
  for (size_t k = 0; k < rep.times.size(); ++k)
    for (int c = 0; c < 3; ++c)
      if (std::abs(rep.z[k][c]) >= 3.0 && std::abs(rep.z[k][c]) < 4.0)
        std::fprintf(summary, "flag: |z| = %.2f for r%d at t = %g\n",
                     std::abs(rep.z[k][c]), c + 1, rep.times[k]);
  return rep.max_abs_z < 4.0 ? kExitOk : kExitFailure;
}

int run_evolve(const ChannelSelection& sel, double t, const BlochVector& r0) {
  const QubitChannel ch = make_family(sel)(t);
  const DensityMatrix2 out = apply_channel(ch, density_from_bloch(r0));
  const BlochVector r1 = bloch_from_density(out);
  std::printf("r(0) = (%.15g, %.15g, %.15g)\n", r0[0], r0[1], r0[2]);
  std::printf("r(t) = (%.15g, %.15g, %.15g)   |r| = %.15g\n", r1[0], r1[1],
              r1[2], r1.norm());
  print_2x2("rho(t)", out.matrix());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qubit decoherence and disentanglement analysis"};
  app.require_subcommand(1);

  ChannelSelection dis_sel;
  double dis_t_max = 0.0, dis_tol = 0.0;
  CLI::App* dis = app.add_subcommand(
      "disentangle", "locate the first entanglement-breaking time");
  add_channel_options(dis, &dis_sel);
  dis->add_option("--t-max", dis_t_max, "search horizon (default 20*tau)")
      ->check(CLI::PositiveNumber);
  dis->add_option("--tol", dis_tol, "bisection tolerance (default 1e-9*tau)")
      ->check(CLI::PositiveNumber);

  ChannelSelection sweep_sel;
  double sweep_t_max = 0.0;
  int sweep_steps = 300;
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate Bloch contraction and Choi spectra over time");
  add_channel_options(sweep, &sweep_sel);
  sweep->add_option("--t-max", sweep_t_max, "grid end (default 5*tau)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--steps", sweep_steps, "grid points")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", sweep_out, "CSV path (stdout when omitted)");

  double holevo_t = 0.0, holevo_tau = 1.0;
  CLI::App* holevo = app.add_subcommand(
      "holevo", "print the six-state measure-and-prepare decomposition");
  holevo->add_option("--t", holevo_t, "time")
      ->required()
      ->check(CLI::NonNegativeNumber);
  holevo->add_option("--tau", holevo_tau, "decoherence time scale")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  SSEConfig mc_cfg;
  bool mc_dt_set = false, mc_tf_set = false;
  std::string mc_out;
  CLI::App* mc = app.add_subcommand(
      "montecarlo", "unravel the random-field Schroedinger equation");
  mc->add_option("--tau", mc_cfg.tau, "noise time scale")->capture_default_str();
  mc->add_option("--dt", mc_cfg.dt, "step (default tau/1000)")
      ->each([&](const std::string&) { mc_dt_set = true; });
  mc->add_option("--t-final", mc_cfg.t_final, "end time (default 3*tau)")
      ->each([&](const std::string&) { mc_tf_set = true; });
  mc->add_option("--n-traj", mc_cfg.n_traj, "trajectories")
      ->capture_default_str();
  mc->add_option("--seed", mc_cfg.seed, "RNG seed")->capture_default_str();
  mc->add_option("--samples", mc_cfg.sample_count, "sample times")
      ->capture_default_str();
  mc->add_option("--out", mc_out, "CSV path (stdout when omitted)");

  ChannelSelection ev_sel;
  double ev_t = 1.0;
  BlochVector ev_r{{0.0, 0.0, 1.0}};
  CLI::App* ev = app.add_subcommand("evolve", "apply the channel to one state");
  add_channel_options(ev, &ev_sel);
  ev->add_option("--t", ev_t, "time")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  ev->add_option("--r1", ev_r[0], "initial Bloch x")->capture_default_str();
  ev->add_option("--r2", ev_r[1], "initial Bloch y")->capture_default_str();
  ev->add_option("--r3", ev_r[2], "initial Bloch z")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dis->parsed()) {
      if (dis_t_max <= 0.0) dis_t_max = 20.0 * dis_sel.tau;
      if (dis_tol <= 0.0) dis_tol = 1e-9 * dis_sel.tau;
      return run_disentangle(dis_sel, dis_t_max, dis_tol);
    }
    if (sweep->parsed()) {
      if (sweep_t_max <= 0.0) sweep_t_max = 5.0 * sweep_sel.tau;
      return run_sweep(sweep_sel, sweep_t_max, sweep_steps, sweep_out);
    }
    if (holevo->parsed()) return run_holevo(holevo_t, holevo_tau);
    if (mc->parsed()) {
      if (!mc_dt_set) mc_cfg.dt = mc_cfg.tau / 1000.0;
      if (!mc_tf_set) mc_cfg.t_final = 3.0 * mc_cfg.tau;
      return run_montecarlo(mc_cfg, mc_out);
    }
    if (ev->parsed()) return run_evolve(ev_sel, ev_t, ev_r);
  } catch (const HolevoNotApplicable& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitHolevo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
