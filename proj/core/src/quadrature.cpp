#include "latosc/numerics/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace latosc::num {

double compensated_sum(std::span<const double> values) {
  Accumulator acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

std::complex<double> compensated_sum(std::span<const std::complex<double>> values) {
  Accumulator re, im;
  for (const auto& v : values) {
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.value(), im.value()};
}

double periodic_integral(std::span<const double> samples, double spacing) {
  if (samples.size() < 8) {
    throw std::invalid_argument("periodic_integral: need at least 8 samples");
  }
  return spacing * compensated_sum(samples);
}

}  // namespace latosc::num
