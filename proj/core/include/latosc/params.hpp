#pragma once

namespace latosc {

// Discretization frame in natural oscillator units (hbar = m = omega = 1;
// lengths in sqrt(hbar/(m*omega)), energies in hbar*omega).  The spacing d
// is primary; gamma_d = 1/d^2 is derived from it.
struct OscParams {
  double d;    // lattice spacing, > 0
  int m;       // quasi-momentum grid points; even, >= 8
  int n_max;   // site grid half-width, >= 1 (sites n in [-n_max, n_max])

  double gamma_d() const { return 1.0 / (d * d); }

  static constexpr int kDefaultM = 2048;
  static constexpr int kNmaxCap = 4000;

  // n_max < 0 picks the default: ceil(10*sqrt(2*20+1)/d) capped at kNmaxCap,
  // which keeps the classical turning point of the ~20th state well inside
  // the hard wall.
  static OscParams from_spacing(double d, int m = kDefaultM, int n_max = -1);
  static OscParams from_gamma(double gamma_d, int m = kDefaultM, int n_max = -1);
};

}  // namespace latosc
