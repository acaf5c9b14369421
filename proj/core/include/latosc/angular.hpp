#pragma once

#include <span>

#include "latosc/oscillator.hpp"

namespace latosc::osc {

Wave2D tensor_product(const WaveK& a, const WaveK& b);

// One-dimensional operator acting along one axis of the tensor grid
// (axis 1 = k1/rows, axis 2 = k2/columns).
Wave2D apply_axis(LadderOp op, const Wave2D& psi, int axis);

// Lattice angular momentum L = i (a1 a2+ - a1+ a2), via per-axis ladder
// applications.
Wave2D angular_apply(const Wave2D& psi);

// The same operator in its x1 p2 - x2 p1 form; the two agree identically.
Wave2D angular_apply_xp(const Wave2D& psi);

// (N1 + N2) psi with Ni = ai+ ai.
Wave2D number_sum_apply(const Wave2D& psi);

// Documented smooth test family for the continuum-limit commutator study:
//   psi(k1, k2) = exp(gamma (cos(k1 d) + cos(k2 d) - 2)) * exp(i k1 n0 d),
// gamma = 1/d^2, site shift n0 = round(1/d), grid M = 64/d rounded up to a
// power of two.  Choosing 1/d integral keeps the shift site-exact.
Wave2D smooth_test_state(double d);

// r(d) = ||[L, N1+N2] psi_d|| / ||psi_d|| on the family above, one entry per
// spacing; decreases as the lattice refines.
std::vector<double> angular_nonconservation(std::span<const double> d_values);

}  // namespace latosc::osc
