#pragma once

#include <complex>
#include <span>

namespace latosc::num {

// Neumaier compensated summation.  The 1e-10 tolerances demanded of inner
// products and periodic integrals at M ~ 2048 are fragile under plain
// left-to-right accumulation.
double compensated_sum(std::span<const double> values);
std::complex<double> compensated_sum(std::span<const std::complex<double>> values);

class Accumulator {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Uniform-weight sum times spacing over one period.  Exact for trigonometric
// polynomials below the Nyquist degree; spectrally accurate for smooth
// periodic integrands.
double periodic_integral(std::span<const double> samples, double spacing);

}  // namespace latosc::num
