#pragma once

#include <complex>
#include <span>
#include <vector>

namespace latosc::num {

// Unnormalized discrete Fourier transform,
//   X_k = sum_j x_j exp(-+ 2*pi*i*j*k / n)    (forward: -, inverse: +),
// with no 1/n factor either way.  Power-of-two sizes take the in-place
// radix-2 path; other sizes fall back to the direct O(n^2) sum, which is
// adequate for the 1D grids used here.
void dft_inplace(std::vector<std::complex<double>>& a, bool inverse);
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> a, bool inverse);

bool is_pow2(std::size_t n);

}  // namespace latosc::num
