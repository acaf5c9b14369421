// latosc command-line tool: reproduces the lattice-oscillator results as CSV
// data (spectra, ground states, coherent-state residuals, angular-momentum
// decay, impurity scattering lengths, many-body pair correlations) plus a
// closed-form verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
// failure.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>

#include "latosc/angular.hpp"
#include "latosc/coherent.hpp"
#include "latosc/manybody.hpp"
#include "latosc/numerics/eigh.hpp"
#include "latosc/numerics/rng.hpp"
#include "latosc/oscillator.hpp"
#include "latosc/scattering.hpp"

#include "config.hpp"
#include "csv.hpp"
#include "verify.hpp"
#include "version.hpp"

namespace latosc::cli {
namespace {

using namespace latosc;
using osc::LadderOp;

std::string out_path(const RunConfig& cfg, const std::string& explicit_out,
                     const std::string& fallback) {
  if (!explicit_out.empty()) return explicit_out;
  return (std::filesystem::path(cfg.out_dir) / fallback).string();
}

void emit_plot_script(const std::string& csv_path, const std::string& title,
                      const std::string& plot_cmd) {
  std::ofstream gp(csv_path + ".gp");
  gp << "# gnuplot script for " << csv_path << "\n";
  gp << "set datafile separator ','\n";
  gp << "set key outside\n";
  gp << "set title '" << title << "'\n";
  gp << plot_cmd << "\n";
  gp << "pause -1\n";
}

WaveK axpy(const WaveK& a, cplx ca, const WaveK& b, cplx cb) {
  std::vector<cplx> v(a.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ca * a.values[i] + cb * b.values[i];
  return WaveK(a.grid, std::move(v));
}

// ---------------------------------------------------------------- spectrum
int cmd_spectrum(const RunConfig& cfg, double gamma, const std::string& rep_name, int n_eigs,
                 int order, const std::string& out, bool plot) {
  if (!(gamma > 0.0)) throw std::invalid_argument("spectrum: gamma-d must be positive");
  OscParams p = OscParams::from_gamma(gamma, cfg.m, cfg.n_max);
  osc::Representation rep =
      rep_name == "site" ? osc::Representation::site : osc::Representation::kspace;
  auto mat = osc::number_matrix(rep, p, order);
  auto sp = osc::spectrum(mat, n_eigs);

  std::string path = out_path(cfg, out, "spectrum.csv");
  CsvWriter csv(path, "spectrum", cfg.echo());
  csv.comment("gamma_d=" + CsvWriter::format(gamma) + " rep=" + rep_name +
              " stencil_order=" + std::to_string(order));
  csv.columns({"s", "N_tilde", "rep", "gamma_d", "resolution"});
  for (std::size_t s = 0; s < sp.eigenvalues.size(); ++s) {
    csv.begin_row();
    csv.field(static_cast<long>(s));
    csv.field(sp.eigenvalues[s]);
    csv.field(rep_name);
    csv.field(gamma);
    csv.field(static_cast<long>(sp.resolution));
    csv.end_row();
  }
  if (plot) {
    emit_plot_script(path, "number-operator eigenvalues",
                     "plot '" + path + "' using 1:2 with points pt 7 title 'N_s'");
  }
  std::cout << path << "\n";
  return 0;
}

// -------------------------------------------------------------- groundstate
int cmd_groundstate(const RunConfig& cfg, double gamma, const std::string& out) {
  if (!(gamma > 0.0)) throw std::invalid_argument("groundstate: gamma-d must be positive");
  OscParams p = OscParams::from_gamma(gamma, cfg.m, cfg.n_max);
  KGrid grid(p);
  WaveK psi0 = osc::ground_state_analytic(grid, gamma);
  auto rep = osc::uncertainty_report(psi0);
  WaveX site = to_sites(psi0, std::min(p.n_max, p.m / 2 - 1));

  std::string path = out_path(cfg, out, "groundstate.csv");
  CsvWriter csv(path, "groundstate", cfg.echo());
  csv.comment("gamma_d=" + CsvWriter::format(gamma));
  csv.comment("dx=" + CsvWriter::format(rep.dx) + " dp=" + CsvWriter::format(rep.dp) +
              " abs_cos_kd=" + CsvWriter::format(rep.cos_abs));
  csv.columns({"representation", "coordinate", "value_re", "value_im"});
  for (int j = 0; j < grid.size(); ++j) {
    csv.begin_row();
    csv.field(std::string("k"));
    csv.field(grid.point(j));
    csv.field(psi0.values[static_cast<std::size_t>(j)].real());
    csv.field(psi0.values[static_cast<std::size_t>(j)].imag());
    csv.end_row();
  }
  for (int n = -site.n_max; n <= site.n_max; ++n) {
    csv.begin_row();
    csv.field(std::string("site"));
    csv.field(n * p.d);
    csv.field(site.at_site(n).real());
    csv.field(site.at_site(n).imag());
    csv.end_row();
  }
  std::cout << path << "\n";
  return 0;
}

// ----------------------------------------------------------------- coherent
double coherent_residual(const KGrid& grid, cplx alpha, osc::CoherentKind kind) {
  auto st = osc::coherent_state({alpha, kind}, grid);
  WaveK apsi = osc::apply_operator(LadderOp::annihilate, st.psi);
  WaveK target = st.psi;
  if (kind == osc::CoherentKind::eigenstate_form) {
    for (auto& z : target.values) z *= alpha;
  } else {
    for (int j = 0; j < grid.size(); ++j) {
      target.values[static_cast<std::size_t>(j)] *=
          alpha * std::cos(grid.point(j) * grid.spacing());
    }
  }
  return norm(axpy(apsi, 1.0, target, -1.0)) / norm(st.psi);
}

int cmd_coherent(const RunConfig& cfg, double gamma, const std::string& kind_name,
                 int n_alpha, bool single, cplx alpha_single, const std::string& out) {
  if (!(gamma > 0.0)) throw std::invalid_argument("coherent: gamma-d must be positive");
  osc::CoherentKind kind = osc::CoherentKind::defined_form;
  if (kind_name == "eigenstate") kind = osc::CoherentKind::eigenstate_form;
  if (kind_name == "displacement") kind = osc::CoherentKind::displacement_generated;
  KGrid grid(1.0 / std::sqrt(gamma), cfg.m);

  std::vector<cplx> alphas;
  if (single) {
    alphas.push_back(alpha_single);
  } else {
    num::SplitMix64 rng(cfg.seed);
    for (int s = 0; s < n_alpha; ++s) {
      double r = 3.0 * std::sqrt(rng.next_double());
      double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      cplx a = std::polar(r, phase);
      if (kind == osc::CoherentKind::eigenstate_form) {
        a = cplx(std::round(2.0 * a.real()) / 2.0, 0.0);  // PBC-allowed set
      }
      alphas.push_back(a);
    }
  }

  std::string path = out_path(cfg, out, "coherent.csv");
  CsvWriter csv(path, "coherent", cfg.echo());
  csv.comment("gamma_d=" + CsvWriter::format(gamma) + " kind=" + kind_name);
  csv.columns({"alpha_re", "alpha_im", "kind", "residual"});
  for (cplx a : alphas) {
    csv.begin_row();
    csv.field(a.real());
    csv.field(a.imag());
    csv.field(kind_name);
    csv.field(coherent_residual(grid, a, kind));
    csv.end_row();
  }
  std::cout << path << "\n";
  return 0;
}

// ------------------------------------------------------------------ angular
int cmd_angular(const RunConfig& cfg, double gamma, int m2d, std::vector<double> d_list,
                const std::string& out) {
  if (!(gamma > 0.0)) throw std::invalid_argument("angular: gamma-d must be positive");
  KGrid grid(1.0 / std::sqrt(gamma), m2d);
  WaveK psi0 = osc::ground_state_analytic(grid, gamma);
  Wave2D psi2d = osc::tensor_product(psi0, psi0);
  double l_psi0 = norm(osc::angular_apply(psi2d)) / norm(psi2d);

  auto res = osc::angular_nonconservation(d_list);

  std::string path = out_path(cfg, out, "angular.csv");
  CsvWriter csv(path, "angular", cfg.echo());
  csv.comment("gamma_d=" + CsvWriter::format(gamma) + " m2d=" + std::to_string(m2d));
  csv.comment("l_on_ground2d=" + CsvWriter::format(l_psi0));
  csv.columns({"d", "residual"});
  for (std::size_t i = 0; i < d_list.size(); ++i) {
    csv.begin_row();
    csv.field(d_list[i]);
    csv.field(res[i]);
    csv.end_row();
  }
  std::cout << path << "\n";
  return 0;
}

// --------------------------------------------------------------- scattering
int cmd_scattering(const RunConfig& cfg, std::vector<double> v0_list, int n_theta,
                   int resolution, const std::string& out, bool plot) {
  if (v0_list.empty()) throw std::invalid_argument("scattering: need at least one v0");
  for (double v : v0_list) {
    if (!(v >= 0.0)) throw std::invalid_argument("scattering: v0 must be >= 0");
  }
  std::string path = out_path(cfg, out, "scattering.csv");
  CsvWriter csv(path, "scattering", cfg.echo());
  csv.columns({"theta0_over_pi", "a_bar", "v0", "resolution"});
  for (double v0 : v0_list) {
    auto sweep = ring::scattering_sweep(v0, n_theta, resolution);
    for (std::size_t i = 0; i < sweep.theta0.size(); ++i) {
      csv.begin_row();
      csv.field(sweep.theta0[i] / std::numbers::pi);
      csv.field(sweep.a_bar[i]);
      csv.field(v0);
      csv.field(static_cast<long>(resolution));
      csv.end_row();
    }
  }

  double lam_max = 3.0;
  for (double v : v0_list) lam_max = std::max(lam_max, std::sqrt(2.0 * v));
  auto inset = ring::scattering_inset(lam_max, 256, resolution);
  std::string inset_path = sibling_path(path, "inset");
  CsvWriter icsv(inset_path, "scattering", cfg.echo());
  icsv.comment("a_bar(0) as a function of lambda_L");
  icsv.columns({"lambda_L", "a_bar_at_0"});
  for (const auto& pt : inset) {
    icsv.begin_row();
    icsv.field(pt.lambda_l);
    icsv.field(pt.a_bar0);
    icsv.end_row();
  }
  if (plot) {
    std::string vlist;
    for (double v : v0_list) vlist += (vlist.empty() ? "" : " ") + CsvWriter::format(v);
    emit_plot_script(path, "position-dependent scattering length",
                     "plot for [v in '" + vlist + "'] '" + path +
                         "' using 1:(abs($3-v)<1e-12 ? $2 : 1/0) with lines title 'v0='.v");
  }
  std::cout << path << "\n" << inset_path << "\n";
  return 0;
}

// ----------------------------------------------------------------- manybody
int cmd_manybody(const RunConfig& cfg, int n, double lambda, const std::string& method,
                 const std::string& out, bool plot) {
  ring::RingParams params{n, lambda, cfg.coeff_c};
  ring::PairCorr pc;
  if (method == "quad") {
    if (n > 4) {
      throw std::invalid_argument("manybody: quadrature supports N <= 4; use --method mc");
    }
    pc = ring::pair_correlation_quad(params, cfg.grid_g);
  } else if (method == "mc") {
    ring::McOptions mopts;
    mopts.n_samples = cfg.mc_samples;
    mopts.n_chains = cfg.mc_chains;
    mopts.seed = cfg.seed;
    mopts.g = cfg.grid_g;
    pc = ring::pair_correlation_mc(params, mopts);
  } else {
    throw std::invalid_argument("manybody: method must be quad or mc");
  }

  std::string path = out_path(cfg, out, "manybody.csv");
  CsvWriter csv(path, "manybody", cfg.echo());
  csv.comment("N=" + std::to_string(n) + " lambda_tilde=" + CsvWriter::format(lambda) +
              " coeff_c=" + CsvWriter::format(cfg.coeff_c) +
              " seed=" + std::to_string(cfg.seed) + " resolution=" + std::to_string(pc.g));
  csv.columns({"theta", "theta_prime", "rho", "stderr", "N", "lambda_tilde", "method"});
  const bool mc = pc.method == ring::PairCorrMethod::monte_carlo;
  for (int a = 0; a < pc.g; ++a) {
    for (int b = 0; b < pc.g; ++b) {
      csv.begin_row();
      csv.field(pc.theta_center(a));
      csv.field(pc.theta_center(b));
      csv.field(pc.rho(a, b));
      csv.field(mc ? pc.stderr_[static_cast<std::size_t>(a) * pc.g + b] : 0.0);
      csv.field(static_cast<long>(n));
      csv.field(lambda);
      csv.field(method);
      csv.end_row();
    }
  }

  auto prof = ring::radial_profile(pc);
  std::string radial_path = sibling_path(path, "radial");
  CsvWriter rcsv(radial_path, "manybody", cfg.echo());
  rcsv.comment("N=" + std::to_string(n) + " lambda_tilde=" + CsvWriter::format(lambda) +
               " coeff_c=" + CsvWriter::format(cfg.coeff_c) +
               " circular_variance=" + CsvWriter::format(ring::circular_variance(prof)));
  rcsv.columns({"delta", "rho_hat"});
  for (std::size_t i = 0; i < prof.delta.size(); ++i) {
    rcsv.begin_row();
    rcsv.field(prof.delta[i]);
    rcsv.field(prof.rho[i]);
    rcsv.end_row();
  }
  if (plot) {
    emit_plot_script(radial_path, "pair-correlation radial profile",
                     "plot '" + radial_path + "' using 1:2 with linespoints title 'rho'");
  }
  std::cout << path << "\n" << radial_path << "\n";
  return 0;
}

// ------------------------------------------------------------------- verify
int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::string& out) {
  auto results = run_verify(suite, cfg);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::printf("%-4s %s.%s measured=%.3e tol=%.3e\n", r.pass ? "PASS" : "FAIL",
                r.suite.c_str(), r.name.c_str(), r.measured, r.tolerance);
  }
  if (!out.empty()) {
    CsvWriter csv(out, "verify", cfg.echo());
    csv.columns({"suite", "check", "measured", "tolerance", "status"});
    for (const auto& r : results) {
      csv.begin_row();
      csv.field(r.suite);
      csv.field(r.name);
      csv.field(r.measured);
      csv.field(r.tolerance);
      csv.field(std::string(r.pass ? "pass" : "fail"));
      csv.end_row();
    }
  }
  std::printf("%s: %zu checks, %s\n", suite.c_str(), results.size(),
              all_pass ? "all passed" : "FAILURES present");
  return all_pass ? 0 : 1;
}

int dispatch(int argc, char** argv) {
  RunConfig cfg = RunConfig::defaults();

  // --config is honored before flag overrides
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") load_config_file(argv[i + 1], cfg);
  }

  CLI::App app{"lattice oscillator toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "number-operator eigenvalues");
  double sp_gamma = 0.0;
  std::string sp_rep = "site";
  std::string sp_out;
  bool sp_plot = false;
  sp->add_option("--gamma-d", sp_gamma, "dimensionless gamma_d = 1/d^2")->required();
  sp->add_option("--rep", sp_rep, "representation: site | kspace")
      ->check(CLI::IsMember({"site", "kspace"}));
  sp->add_option("--n-eigs", cfg.n_eigs, "eigenvalue count");
  sp->add_option("--order", cfg.stencil_order, "k-space stencil order (2 or 4)")
      ->check(CLI::IsMember({2, 4}));
  sp->add_option("--m", cfg.m, "quasi-momentum grid points");
  sp->add_option("--n-max", cfg.n_max, "site half-width (-1 = auto)");
  sp->add_option("--out,-o", sp_out, "output CSV path");
  sp->add_flag("--emit-plot", sp_plot, "write a gnuplot script next to the CSV");

  // groundstate
  auto* gs = app.add_subcommand("groundstate", "analytic ground state samples");
  double gs_gamma = 0.0;
  std::string gs_out;
  gs->add_option("--gamma-d", gs_gamma, "dimensionless gamma_d")->required();
  gs->add_option("--m", cfg.m, "quasi-momentum grid points");
  gs->add_option("--n-max", cfg.n_max, "site half-width (-1 = auto)");
  gs->add_option("--out,-o", gs_out, "output CSV path");

  // coherent
  auto* co = app.add_subcommand("coherent", "coherent-state residual table");
  double co_gamma = 500.0;
  std::string co_kind = "defined";
  std::string co_out;
  int co_n_alpha = 20;
  double co_are = 0.0, co_aim = 0.0;
  bool co_single = false;
  co->add_option("--gamma-d", co_gamma, "dimensionless gamma_d");
  co->add_option("--kind", co_kind, "defined | eigenstate | displacement")
      ->check(CLI::IsMember({"defined", "eigenstate", "displacement"}));
  co->add_option("--n-alpha", co_n_alpha, "number of seeded amplitudes");
  auto* are = co->add_option("--alpha-re", co_are, "single amplitude, real part");
  co->add_option("--alpha-im", co_aim, "single amplitude, imaginary part");
  co->add_option("--m", cfg.m, "quasi-momentum grid points");
  co->add_option("--out,-o", co_out, "output CSV path");

  // angular
  auto* an = app.add_subcommand("angular", "2D angular momentum checks");
  double an_gamma = 125.0;
  int an_m = 256;
  std::vector<double> an_dlist{0.25, 0.125, 0.0625};
  std::string an_out;
  an->add_option("--gamma-d", an_gamma, "dimensionless gamma_d for the 2D ground state");
  an->add_option("--m", an_m, "2D grid points per axis");
  an->add_option("--d-list", an_dlist, "spacings for the commutator decay study")
      ->delimiter(',');
  an->add_option("--out,-o", an_out, "output CSV path");

  // scattering
  auto* sc = app.add_subcommand("scattering", "position-dependent scattering length");
  std::vector<double> sc_v0;
  std::string sc_out;
  bool sc_plot = false;
  sc->add_option("--v0", sc_v0, "dimensionless depths m V0 L^2 / hbar^2")
      ->required()
      ->delimiter(',');
  sc->add_option("--n-theta", cfg.n_theta, "impurity-position grid");
  sc->add_option("--resolution", cfg.quad_points, "quadrature panels");
  sc->add_option("--out,-o", sc_out, "output CSV path");
  sc->add_flag("--emit-plot", sc_plot, "write a gnuplot script next to the CSV");

  // manybody
  auto* mb = app.add_subcommand("manybody", "ring ground-state pair correlations");
  int mb_n = 0;
  double mb_lambda = 0.0;
  std::string mb_method = "quad";
  std::string mb_out;
  bool mb_plot = false;
  mb->add_option("--n", mb_n, "particle count")->required()->check(CLI::Range(2, 64));
  mb->add_option("--lambda", mb_lambda, "dimensionless coupling lambda L^2")->required();
  mb->add_option("--method", mb_method, "quad | mc")->check(CLI::IsMember({"quad", "mc"}));
  mb->add_option("--g", cfg.grid_g, "pair-correlation mesh");
  mb->add_option("--seed", cfg.seed, "Monte Carlo master seed");
  mb->add_option("--chains", cfg.mc_chains, "Monte Carlo chains");
  mb->add_option("--samples", cfg.mc_samples, "sweeps per chain");
  mb->add_option("--coeff-c", cfg.coeff_c, "ground-state exponent coefficient");
  mb->add_option("--out,-o", mb_out, "output CSV path");
  mb->add_flag("--emit-plot", mb_plot, "write a gnuplot script next to the CSV");

  // verify
  auto* vf = app.add_subcommand("verify", "closed-form invariant suite");
  std::string vf_suite = "all";
  std::string vf_out;
  vf->add_option("--suite", vf_suite,
                 "all | ground | spectrum | hermite | coherent | angular | scattering | "
                 "manybody");
  vf->add_option("--coeff-c", cfg.coeff_c, "many-body exponent coefficient");
  vf->add_option("--out,-o", vf_out, "also write the report as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  co_single = are->count() > 0;

  try {
    if (sp->parsed()) {
      return cmd_spectrum(cfg, sp_gamma, sp_rep, cfg.n_eigs, cfg.stencil_order, sp_out,
                          sp_plot);
    }
    if (gs->parsed()) return cmd_groundstate(cfg, gs_gamma, gs_out);
    if (co->parsed()) {
      return cmd_coherent(cfg, co_gamma, co_kind, co_n_alpha, co_single,
                          cplx(co_are, co_aim), co_out);
    }
    if (an->parsed()) return cmd_angular(cfg, an_gamma, an_m, an_dlist, an_out);
    if (sc->parsed()) {
      return cmd_scattering(cfg, sc_v0, cfg.n_theta, cfg.quad_points, sc_out, sc_plot);
    }
    if (mb->parsed()) return cmd_manybody(cfg, mb_n, mb_lambda, mb_method, mb_out, mb_plot);
    if (vf->parsed()) return cmd_verify(cfg, vf_suite, vf_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const num::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << " (iterations: " << e.iterations
              << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace
}  // namespace latosc::cli

int main(int argc, char** argv) {
  try {
    return latosc::cli::dispatch(argc, argv);
  } catch (const latosc::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
}
