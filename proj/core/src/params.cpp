#include "latosc/params.hpp"

#include <cmath>
#include <stdexcept>

namespace latosc {

namespace {

int default_n_max(double d) {
  double n = std::ceil(10.0 * std::sqrt(41.0) / d);
  return static_cast<int>(std::min(n, static_cast<double>(OscParams::kNmaxCap)));
}

}  // namespace

OscParams OscParams::from_spacing(double d, int m, int n_max) {
  if (!(d > 0.0)) throw std::invalid_argument("OscParams: spacing must be positive");
  if (m < 8 || m % 2 != 0) throw std::invalid_argument("OscParams: M must be even and >= 8");
  if (n_max < 0) n_max = default_n_max(d);
  if (n_max < 1) throw std::invalid_argument("OscParams: n_max must be >= 1");
  return OscParams{d, m, n_max};
}

OscParams OscParams::from_gamma(double gamma_d, int m, int n_max) {
  if (!(gamma_d > 0.0)) throw std::invalid_argument("OscParams: gamma_d must be positive");
  return from_spacing(1.0 / std::sqrt(gamma_d), m, n_max);
}

}  // namespace latosc
