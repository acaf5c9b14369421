#include "latosc/numerics/fourier.hpp"

#include <cmath>
#include <numbers>

namespace latosc::num {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        // re-anchor the twiddle recurrence so round-off does not accumulate
        // along long butterflies
        if ((k & 63u) == 0) w = std::polar(1.0, ang * static_cast<double>(k));
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> dft_direct(std::span<const std::complex<double>> a,
                                             bool inverse) {
  const std::size_t n = a.size();
  std::vector<std::complex<double>> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      // exact angle reduction keeps the direct path usable at large n
      double ang = sign * w * static_cast<double>((j * k) % n);
      acc += a[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

void dft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  if (a.empty()) return;
  if (is_pow2(a.size())) {
    fft_radix2(a, inverse);
  } else {
    a = dft_direct(a, inverse);
  }
}

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> a, bool inverse) {
  if (is_pow2(a.size())) {
    std::vector<std::complex<double>> out(a.begin(), a.end());
    fft_radix2(out, inverse);
    return out;
  }
  return dft_direct(a, inverse);
}

}  // namespace latosc::num
