#include "latosc/wave.hpp"

#include <cmath>
#include <stdexcept>

namespace latosc {

namespace {

void check_finite(const std::vector<cplx>& v, const char* what) {
  for (const auto& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

}  // namespace

WaveK::WaveK(KGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size()) {
    throw std::invalid_argument("WaveK: value count must match grid size");
  }
  check_finite(values, "WaveK");
}

WaveX::WaveX(double d, int nm, std::vector<cplx> v)
    : spacing(d), n_max(nm), values(std::move(v)) {
  if (!(d > 0.0)) throw std::invalid_argument("WaveX: spacing must be positive");
  if (n_max < 1) throw std::invalid_argument("WaveX: n_max must be >= 1");
  if (static_cast<int>(values.size()) != 2 * n_max + 1) {
    throw std::invalid_argument("WaveX: value count must be 2*n_max+1");
  }
  check_finite(values, "WaveX");
}

Wave2D::Wave2D(KGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  std::size_t m = static_cast<std::size_t>(grid.size());
  if (values.size() != m * m) {
    throw std::invalid_argument("Wave2D: value count must be M*M");
  }
  check_finite(values, "Wave2D");
}

}  // namespace latosc
