#include "verify.hpp"

#include <cmath>
#include <numbers>

#include "latosc/angular.hpp"
#include "latosc/coherent.hpp"
#include "latosc/manybody.hpp"
#include "latosc/numerics/rng.hpp"
#include "latosc/oscillator.hpp"
#include "latosc/scattering.hpp"

namespace latosc::cli {

namespace {

using namespace latosc;
using osc::LadderOp;

void add(std::vector<CheckResult>& out, const std::string& suite, const std::string& name,
         double measured, double tol) {
  out.push_back({suite, name, measured, tol, measured <= tol});
}

WaveK axpy(const WaveK& a, cplx ca, const WaveK& b, cplx cb) {
  std::vector<cplx> v(a.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ca * a.values[i] + cb * b.values[i];
  return WaveK(a.grid, std::move(v));
}

void verify_ground(std::vector<CheckResult>& out, const RunConfig& cfg) {
  for (double gamma : {5.0, 50.0, 500.0}) {
    KGrid grid(1.0 / std::sqrt(gamma), cfg.m);
    WaveK psi0 = osc::ground_state_analytic(grid, gamma);
    WaveK apsi = osc::apply_operator(LadderOp::annihilate, psi0);
    add(out, "ground", "annihilation_gamma_" + std::to_string(static_cast<int>(gamma)),
        norm(apsi) / norm(psi0), cfg.tol_ground);
  }
  {
    const double gamma = 500.0;
    KGrid grid(1.0 / std::sqrt(gamma), cfg.m);
    WaveK psi0 = osc::ground_state_analytic(grid, gamma);
    auto rep = osc::uncertainty_report(psi0);
    add(out, "ground", "minimal_uncertainty", std::abs(rep.dx * rep.dp - 0.5 * rep.cos_abs),
        cfg.tol_gup);

    double worst_gup = 0.0;
    double worst_dp = 0.0;
    for (int s = 0; s < 50; ++s) {
      WaveK psi = osc::random_band_limited(grid, 64, 1000 + static_cast<std::uint64_t>(s));
      auto r = osc::uncertainty_report(psi);
      worst_gup = std::max(worst_gup, 0.5 * r.cos_abs - r.dx * r.dp);
      worst_dp = std::max(worst_dp, r.dp - std::sqrt(gamma));
    }
    add(out, "ground", "gup_inequality_50_states", worst_gup, 1e-10);
    add(out, "ground", "dp_bound_50_states", worst_dp, 1e-10);
  }
}

void verify_spectrum(std::vector<CheckResult>& out, const RunConfig& cfg) {
  OscParams p = OscParams::from_gamma(500.0, cfg.m, cfg.n_max);
  auto mat = osc::number_matrix(osc::Representation::site, p);
  auto sp = osc::spectrum(mat, 9);
  add(out, "spectrum", "site_ground_eigenvalue", std::abs(sp.eigenvalues[0]), 1e-6);
  double worst = 0.0;
  for (int s = 0; s + 2 < static_cast<int>(sp.eigenvalues.size()); ++s) {
    worst = std::max(worst, std::abs(sp.eigenvalues[static_cast<std::size_t>(s + 2)] -
                                     sp.eigenvalues[static_cast<std::size_t>(s)] - 1.0));
  }
  add(out, "spectrum", "site_ladder_spacing", worst, 0.05);
}

void verify_hermite(std::vector<CheckResult>& out, const RunConfig& cfg) {
  OscParams p = OscParams::from_gamma(500.0, cfg.m, cfg.n_max);
  KGrid grid(p);
  auto mat = osc::number_matrix(osc::Representation::kspace, p, cfg.stencil_order);
  auto sp = osc::spectrum(mat, 3, /*want_vectors=*/true);
  WaveK psi2 = osc::eigenvector_wavek(sp, grid, 2);
  add(out, "hermite", "eigenpair_2_residual",
      osc::hermite_residual(psi2, sp.eigenvalues[2], cfg.stencil_order), cfg.tol_hermite);
}

void verify_coherent(std::vector<CheckResult>& out, const RunConfig& cfg) {
  const double gamma = 500.0;
  KGrid grid(1.0 / std::sqrt(gamma), cfg.m);
  WaveK psi0 = osc::ground_state_analytic(grid, gamma);

  num::SplitMix64 rng(cfg.seed);
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    double r = 3.0 * std::sqrt(rng.next_double());
    double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    cplx alpha = std::polar(r, phase);
    auto st = osc::coherent_state({alpha, osc::CoherentKind::defined_form}, grid);
    WaveK apsi = osc::apply_operator(LadderOp::annihilate, st.psi);
    WaveK target = st.psi;
    for (int j = 0; j < grid.size(); ++j) {
      target.values[static_cast<std::size_t>(j)] *=
          alpha * std::cos(grid.point(j) * grid.spacing());
    }
    worst = std::max(worst, norm(axpy(apsi, 1.0, target, -1.0)) / norm(st.psi));
  }
  add(out, "coherent", "defining_relation_20_seeded", worst, cfg.tol_coherent);

  auto st = osc::coherent_state({cplx(1.0, 0.0), osc::CoherentKind::defined_form}, grid);
  WaveK disp = osc::displacement_apply(cplx(1.0, 0.0), psi0);
  double nd = norm(disp);
  for (auto& z : disp.values) z /= nd;
  add(out, "coherent", "displacement_equals_defined", norm(axpy(st.psi, 1.0, disp, -1.0)),
      1e-12);

  auto zero = osc::coherent_state({cplx(0.0, 0.0), osc::CoherentKind::defined_form}, grid);
  add(out, "coherent", "alpha_zero_is_ground_state", norm(axpy(zero.psi, 1.0, psi0, -1.0)),
      1e-12);
}

void verify_angular(std::vector<CheckResult>& out, const RunConfig& cfg) {
  const double gamma = 125.0;
  KGrid grid(1.0 / std::sqrt(gamma), 256);
  WaveK psi0 = osc::ground_state_analytic(grid, gamma);
  Wave2D psi2d = osc::tensor_product(psi0, psi0);
  Wave2D lpsi = osc::angular_apply(psi2d);
  add(out, "angular", "l_annihilates_ground_2d", norm(lpsi) / norm(psi2d), cfg.tol_angular);

  const double ds[] = {0.25, 0.125, 0.0625};
  auto res = osc::angular_nonconservation(ds);
  double worst = -1.0;  // require strict decrease: r(d/2) - r(d) < 0
  for (std::size_t i = 1; i < res.size(); ++i) worst = std::max(worst, res[i] - res[i - 1]);
  add(out, "angular", "commutator_decay_strict", worst, -1e-12);
}

void verify_scattering(std::vector<CheckResult>& out, const RunConfig& cfg) {
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    double lam = 0.3 * i;
    ring::ScatterParams p{0.5 * lam * lam, 0.0, cfg.quad_points};
    worst = std::max(worst,
                     std::abs(ring::scattering_length(p) - (-std::exp(-2.0 * lam))));
  }
  add(out, "scattering", "closed_form_a0_10_lambdas", worst, cfg.tol_scattering);

  auto sweep = ring::scattering_sweep(0.0, 64, cfg.quad_points);
  double dev = 0.0;
  for (double a : sweep.a_bar) dev = std::max(dev, std::abs(a + 1.0));
  add(out, "scattering", "free_limit_minus_one", dev, cfg.tol_scattering);
}

void verify_manybody(std::vector<CheckResult>& out, const RunConfig& cfg) {
  for (int n : {2, 3, 4}) {
    for (double lam : {0.1, 1.0}) {
      ring::RingParams p{n, lam, cfg.coeff_c};
      std::string tag =
          "N" + std::to_string(n) + "_lambda" + (lam < 1.0 ? "0p1" : "1");
      add(out, "manybody", "annihilation_" + tag, ring::annihilation_residual(p),
          cfg.tol_manybody);
      add(out, "manybody", "zero_energy_" + tag,
          ring::ground_energy(p, n == 4 ? std::min(cfg.energy_points, 20) : cfg.energy_points),
          cfg.tol_manybody);
    }
  }
  {
    // closed form holds for any coeff_c: rho(delta) = exp(2 c lambda (cos - 1))
    ring::RingParams p{2, 1.0, cfg.coeff_c};
    auto pc = ring::pair_correlation_quad(p, cfg.grid_g);
    auto prof = ring::radial_profile(pc);
    double worst = 0.0;
    for (std::size_t i = 0; i < prof.delta.size(); ++i) {
      double expect = std::exp(2.0 * p.coeff_c * p.lambda_tilde * (std::cos(prof.delta[i]) - 1.0));
      worst = std::max(worst, std::abs(prof.rho[i] - expect));
    }
    add(out, "manybody", "n2_closed_form_profile", worst, 1e-12);
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& suite, const RunConfig& cfg) {
  static const char* known[] = {"all",     "ground",     "spectrum", "coherent",
                                "angular", "scattering", "manybody", "hermite"};
  bool ok = false;
  for (const char* k : known) ok = ok || suite == k;
  if (!ok) throw ConfigError("verify: unknown suite '" + suite + "'");

  std::vector<CheckResult> out;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  if (want("ground")) verify_ground(out, cfg);
  if (want("spectrum")) verify_spectrum(out, cfg);
  if (want("hermite")) verify_hermite(out, cfg);
  if (want("coherent")) verify_coherent(out, cfg);
  if (want("angular")) verify_angular(out, cfg);
  if (want("scattering")) verify_scattering(out, cfg);
  if (want("manybody")) verify_manybody(out, cfg);
  return out;
}

}  // namespace latosc::cli
