#pragma once

#include <cstdint>
#include <vector>

#include "latosc/numerics/banded.hpp"
#include "latosc/transforms.hpp"

namespace latosc::osc {

// The six lattice operators of the supersymmetric-form oscillator, acting in
// quasi-momentum space.  In natural units the quadratures coincide with
// position/momentum: X = x, P = p.
//   p: multiply by sin(k d)/d
//   x: i d/dk, applied exactly through the site basis (diagonal there)
//   a  = (X + iP)/sqrt(2),  a+ = (X - iP)/sqrt(2)
enum class LadderOp { position, momentum, quad_x, quad_p, annihilate, create };

WaveK apply_operator(LadderOp op, const WaveK& psi);

// (XP - PX) psi; equals i cos(k d) psi pointwise for states resolved by the
// grid.
WaveK commutator_xp(const WaveK& psi);

enum class Representation { kspace, site };

// Number operator N = a+ a in either representation.
//   kspace: 1/2 (-D2 + sin^2(k d)/d^2 - cos(k d)), D2 the periodic central
//           second difference of the chosen order (2 or 4);
//   site:   diagonal x^2/2 + gamma/4, hop -1/4, second-neighbor hop -gamma/8,
//           hard wall at +-n_max.
struct OperatorMatrix {
  Representation rep;
  OscParams params;
  int stencil_order;  // meaningful for kspace only
  num::BandedSym mat;
};

OperatorMatrix number_matrix(Representation rep, const OscParams& params, int order = 4);

struct SpectrumResult {
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> eigenvectors; // unit l2 vectors, optional
  Representation rep;
  double gamma_d;
  int resolution;      // M for kspace, n_max for site
  int stencil_order;   // kspace only
};

// Lowest n_eigs eigenvalues (and vectors on request) of the number operator.
// Throws num::ConvergenceError with the iteration count on failure.
SpectrumResult spectrum(const OperatorMatrix& op, int n_eigs, bool want_vectors = false,
                        double tol = 1e-12);

// Eigenvector idx as a normalized k-space wave function (kspace matrices).
WaveK eigenvector_wavek(const SpectrumResult& s, const KGrid& grid, int idx);

// Analytic ground state psi0(k) = N exp(gamma (cos(k d) - 1)), normalized,
// strictly positive wherever representable (the far tail underflows for
// gamma >~ 350).
WaveK ground_state_analytic(const KGrid& grid, double gamma_d);

struct UncertaintyReport {
  double dx;        // std dev of X
  double dp;        // std dev of P
  double cos_abs;   // |<cos(k d)>|
};

// Guarantees dx*dp >= cos_abs/2 - 1e-10 (Robertson bound on the discrete
// operators) and dp <= sqrt(gamma_d) (sup-norm of the P multiplier).
UncertaintyReport uncertainty_report(const WaveK& psi);

// Relative residual of the lattice Hermite equation
//   phi'' - 2 (sin(k d)/d) phi' + 2 Ntilde phi = 0,  phi = psi/psi0,
// evaluated with central stencils of the given order on the window where
// psi0 >= 1e-5 * max(psi0) (the far tail of psi0 underflows at large gamma
// and would amplify eigenvector round-off without bound).
double hermite_residual(const WaveK& psi, double n_tilde, int order = 4);

// Normalized pseudo-random state with site support in [-bandwidth, bandwidth];
// deterministic in the seed.  Used by the uncertainty and adjointness checks.
WaveK random_band_limited(const KGrid& grid, int bandwidth, std::uint64_t seed);

}  // namespace latosc::osc
