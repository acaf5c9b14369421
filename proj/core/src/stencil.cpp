#include "latosc/numerics/stencil.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace latosc::num {

namespace {

template <typename T>
std::vector<T> diff_impl(std::span<const T> f, int deriv, int order, double h,
                         bool periodic) {
  if (deriv != 1 && deriv != 2) throw std::invalid_argument("central_diff: deriv must be 1 or 2");
  if (order != 2 && order != 4) throw std::invalid_argument("central_diff: order must be 2 or 4");
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  const std::ptrdiff_t half = order / 2;
  const std::ptrdiff_t min_size = periodic ? 2 * half + 1 : (order == 4 ? 6 : 4);
  if (n < min_size) throw std::invalid_argument("central_diff: too few samples for stencil");

  std::vector<T> out(f.size());
  const double h1 = 1.0 / h;
  const double h2 = 1.0 / (h * h);

  auto at = [&](std::ptrdiff_t i) -> T {
    if (periodic) return f[((i % n) + n) % n];
    return f[i];
  };

  auto central = [&](std::ptrdiff_t i) -> T {
    if (deriv == 1) {
      if (order == 2) return (at(i + 1) - at(i - 1)) * (0.5 * h1);
      return (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) * (h1 / 12.0);
    }
    if (order == 2) return (at(i + 1) - 2.0 * at(i) + at(i - 1)) * h2;
    return (-at(i + 2) + 16.0 * at(i + 1) - 30.0 * at(i) + 16.0 * at(i - 1) - at(i - 2)) *
           (h2 / 12.0);
  };

  std::ptrdiff_t lo = periodic ? 0 : half;
  std::ptrdiff_t hi = periodic ? n : n - half;
  for (std::ptrdiff_t i = lo; i < hi; ++i) out[static_cast<std::size_t>(i)] = central(i);
  if (periodic) return out;

  // One-sided stencils of matching order at the edges (Fornberg weights).
  auto apply = [&](std::ptrdiff_t i0, std::span<const double> w, std::ptrdiff_t start,
                   int dir, double scale) {
    T acc{};
    for (std::size_t m = 0; m < w.size(); ++m) {
      acc += w[m] * f[static_cast<std::size_t>(start + dir * static_cast<std::ptrdiff_t>(m))];
    }
    out[static_cast<std::size_t>(i0)] = acc * scale;
  };

  if (deriv == 1 && order == 2) {
    constexpr std::array<double, 3> w{-3.0, 4.0, -1.0};
    apply(0, w, 0, +1, 0.5 * h1);
    apply(n - 1, w, n - 1, -1, -0.5 * h1);
  } else if (deriv == 1 && order == 4) {
    constexpr std::array<double, 5> w0{-25.0, 48.0, -36.0, 16.0, -3.0};
    constexpr std::array<double, 5> w1{-3.0, -10.0, 18.0, -6.0, 1.0};
    apply(0, w0, 0, +1, h1 / 12.0);
    apply(1, w1, 0, +1, h1 / 12.0);
    apply(n - 1, w0, n - 1, -1, -h1 / 12.0);
    apply(n - 2, w1, n - 1, -1, -h1 / 12.0);
  } else if (deriv == 2 && order == 2) {
    constexpr std::array<double, 4> w{2.0, -5.0, 4.0, -1.0};
    apply(0, w, 0, +1, h2);
    apply(n - 1, w, n - 1, -1, h2);
  } else {
    constexpr std::array<double, 6> w0{45.0, -154.0, 214.0, -156.0, 61.0, -10.0};
    constexpr std::array<double, 6> w1{10.0, -15.0, -4.0, 14.0, -6.0, 1.0};
    apply(0, w0, 0, +1, h2 / 12.0);
    apply(1, w1, 0, +1, h2 / 12.0);
    apply(n - 1, w0, n - 1, -1, h2 / 12.0);
    apply(n - 2, w1, n - 1, -1, h2 / 12.0);
  }
  return out;
}

}  // namespace

std::vector<double> central_diff(std::span<const double> f, int deriv, int order,
                                 double spacing, bool periodic) {
  return diff_impl(f, deriv, order, spacing, periodic);
}

std::vector<std::complex<double>> central_diff(std::span<const std::complex<double>> f,
                                               int deriv, int order, double spacing,
                                               bool periodic) {
  return diff_impl(f, deriv, order, spacing, periodic);
}

}  // namespace latosc::num
