#pragma once

#include <complex>
#include <vector>

#include "latosc/wave.hpp"

namespace latosc {

// Discrete inner product <a, b> = dk * sum_j conj(a_j) b_j (compensated).
cplx inner_product(const WaveK& a, const WaveK& b);
double norm(const WaveK& psi);

// Site-sum norm^2 = sum_n |psi(n)|^2 -- the counterpart of ||.||_K under the
// isometry below.
double norm_sq_sites(const WaveX& psi);

// Fourier transform to direct lattice space,
//   psi(n) = sqrt(d/2pi) * dk * sum_j exp(i k_j n d) psi(k_j),
// an isometry up to window truncation: sum_n |psi(n)|^2 ~ ||psi||_K^2.
// Warns on stderr when 2*n_max+1 > M (sites beyond one period alias).
WaveX to_sites(const WaveK& psi, int n_max);

// Inverse transform,
//   psi(k_j) = sqrt(d/2pi) * sum_n exp(-i k_j n d) psi(n);
// from_sites(to_sites(psi)) = psi to round-off once the truncated site mass
// is negligible.
WaveK from_sites(const WaveX& psi, const KGrid& grid);

// Full-period site amplitudes, index m = 0..M-1 standing for site n = m
// (m <= M/2) or n = m - M (m > M/2).  Exact round trip with its inverse;
// this is the route by which the position operator acts.
std::vector<cplx> to_full_sites(const WaveK& psi);
WaveK from_full_sites(const std::vector<cplx>& sites, const KGrid& grid);

// 2D analogues on the tensor grid (weight dk^2).
cplx inner_product(const Wave2D& a, const Wave2D& b);
double norm(const Wave2D& psi);

}  // namespace latosc
