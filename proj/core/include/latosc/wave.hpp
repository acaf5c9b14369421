#pragma once

#include <complex>
#include <vector>

#include "latosc/grid.hpp"

namespace latosc {

using cplx = std::complex<double>;

// Wave function sampled on a KGrid.  Immutable by convention: operations
// return fresh objects.
struct WaveK {
  KGrid grid;
  std::vector<cplx> values;

  WaveK(KGrid g, std::vector<cplx> v);
  static WaveK zeros(const KGrid& g) {
    return WaveK(g, std::vector<cplx>(static_cast<std::size_t>(g.size()), cplx{}));
  }
  int size() const { return grid.size(); }
};

// Wave function on lattice sites x = n*d, n in [-n_max, n_max]; index 0 of
// `values` is the site n = -n_max, so the central site sits at values[n_max].
struct WaveX {
  double spacing;
  int n_max;
  std::vector<cplx> values;

  WaveX(double d, int n_max, std::vector<cplx> v);
  int site(int idx) const { return idx - n_max; }
  cplx& at_site(int n) { return values[static_cast<std::size_t>(n + n_max)]; }
  const cplx& at_site(int n) const { return values[static_cast<std::size_t>(n + n_max)]; }
  int size() const { return 2 * n_max + 1; }
};

// Two-dimensional tensor-grid wave function psi(k1, k2) on identical KGrids.
// Row index is k1, column index is k2: values[i1 * M + i2].
struct Wave2D {
  KGrid grid;
  std::vector<cplx> values;

  Wave2D(KGrid g, std::vector<cplx> v);
  static Wave2D zeros(const KGrid& g) {
    std::size_t m = static_cast<std::size_t>(g.size());
    return Wave2D(g, std::vector<cplx>(m * m, cplx{}));
  }
  cplx& at(int i1, int i2) { return values[static_cast<std::size_t>(i1) * grid.size() + i2]; }
  const cplx& at(int i1, int i2) const {
    return values[static_cast<std::size_t>(i1) * grid.size() + i2];
  }
};

}  // namespace latosc
