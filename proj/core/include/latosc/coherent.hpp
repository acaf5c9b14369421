#pragma once

#include "latosc/oscillator.hpp"

namespace latosc::osc {

// Three coherent-state constructions.
//   eigenstate_form:  psi_alpha = exp(-i sqrt(2) alpha k) psi0, an exact
//     eigenstate a psi = alpha psi; periodic boundary conditions restrict
//     alpha to the half-integers j/2 (constructor rejects anything else).
//   defined_form:     Psi_alpha = exp(-i sqrt(2) alpha sin(k d)/d) psi0,
//     the solution of a Psi = alpha cos(k d) Psi, periodic for every
//     complex alpha.
//   displacement_generated: D(alpha) psi0 with D(alpha) = exp(-i sqrt(2)
//     alpha P) -- the same function as defined_form, kept as a separate tag
//     because it is produced by the operator route.
enum class CoherentKind { eigenstate_form, defined_form, displacement_generated };

struct CoherentSpec {
  cplx alpha;
  CoherentKind kind;
};

struct CoherentState {
  WaveK psi;
  double norm;       // norm before any normalization
  bool normalized;   // true when the returned psi was rescaled to unit norm
};

// Builds the requested state on `grid` from the analytic ground state at
// gamma = 1/d^2.  Real alpha gives a normalized state; complex alpha leaves
// the state unnormalized (the displacement is non-unitary then) and reports
// its norm.
CoherentState coherent_state(const CoherentSpec& spec, const KGrid& grid);

// D(alpha) psi: pointwise multiplication by exp(-i sqrt(2) alpha sin(k d)/d).
// Unitary for real alpha.
WaveK displacement_apply(cplx alpha, const WaveK& psi);

}  // namespace latosc::osc
