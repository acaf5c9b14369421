#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace latosc::ring {

// N particles on a ring, angle coordinates theta_i = x_i/L in (-pi, pi],
// dimensionless coupling lambda_tilde = lambda L^2, energies in
// hbar^2/(2 m L^2).  The Hamiltonian is sum_i A_i^+ A_i with
//   A_i = d/dtheta_i + lambda_tilde sum_{j != i} sin(theta_i - theta_j),
// annihilated exactly by exp(coeff_c lambda_tilde sum_{i<j} cos(theta_ij))
// when coeff_c = 1 (the configurable coefficient exists to probe the
// alternative normalization, which fails annihilation by O(lambda)).
struct RingParams {
  int n;                  // >= 2
  double lambda_tilde;
  double coeff_c = 1.0;
};

// log psi0(theta) = coeff_c * lambda_tilde * sum_{i<j} cos(theta_i - theta_j);
// 2pi-periodic in every coordinate and exchange symmetric.
double log_ground_state(std::span<const double> theta, const RingParams& params);

// max over seeded probe configurations and particle index i of
//   | (psi(+h e_i) - psi(-h e_i)) / (2 h psi) + lambda sum sin(theta_ij) |,
// the finite-difference annihilation check.  O(h^2) for coeff_c = 1.
double annihilation_residual(const RingParams& params, int n_probe = 16, double h = 1e-5,
                             std::uint64_t seed = 12345);

// <psi0|H|psi0>/<psi0|psi0> = sum_i ||A_i psi0||^2 / ||psi0||^2 by tensor
// quadrature on the N-torus (N <= 4), derivatives of log psi0 by central
// difference.  Non-negative by construction.
double ground_energy(const RingParams& params, int quad_points = 24, double h = 1e-5);

enum class PairCorrMethod { quadrature, monte_carlo };

// Pair correlation on a G x G mesh of bin centers theta_m = -pi + (m+1/2) dtheta
// tiling (-pi, pi]^2, normalized to peak 1.  stderr_ is filled by the Monte
// Carlo path only (between-chain standard error, same normalization).
struct PairCorr {
  int g = 0;
  std::vector<double> values;   // row-major rho(theta, theta'), peak 1
  std::vector<double> stderr_;  // empty for quadrature
  PairCorrMethod method = PairCorrMethod::quadrature;
  RingParams params{2, 0.0, 1.0};

  double theta_center(int m) const;
  double rho(int a, int b) const { return values[static_cast<std::size_t>(a) * g + b]; }
};

// Exact marginal of |psi0|^2 over the remaining N-2 coordinates on the
// tensor mesh (N = 2 needs no integration).
PairCorr pair_correlation_quad(const RingParams& params, int g);

struct McOptions {
  long n_samples = 40000;  // sweeps per chain, first 10% discarded as burn-in
  int n_chains = 32;
  std::uint64_t seed = 42;
  int g = 64;
};

// Metropolis sampling of |psi0|^2: single-particle wrapped-uniform moves,
// proposal width tuned to 0.3-0.5 acceptance during burn-in and frozen
// afterwards; (theta_i, theta_j) histogrammed over unordered pairs;
// per-cell standard error from the between-chain variance.  Deterministic
// given (seed, n_chains, n_samples).
PairCorr pair_correlation_mc(const RingParams& params, const McOptions& opts);

// Average over cells at fixed wrapped difference delta = theta - theta',
// renormalized so the profile peak is 1.
struct RadialProfile {
  std::vector<double> delta;   // ascending in (-pi, pi]
  std::vector<double> rho;
  std::vector<double> stderr_; // empty for quadrature
};

RadialProfile radial_profile(const PairCorr& pc);

// 1 - |sum rho e^{i delta}| / sum rho: angular spread of the profile.
double circular_variance(const RadialProfile& profile);

}  // namespace latosc::ring
