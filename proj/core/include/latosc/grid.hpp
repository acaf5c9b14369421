#pragma once

#include <vector>

#include "latosc/params.hpp"

namespace latosc {

// Uniform quasi-momentum grid on the Brillouin zone (-pi/d, pi/d]:
//   k_j = -pi/d + (j+1)*dk,  j = 0..M-1,  dk = 2*pi/(M*d),
// so the right endpoint +pi/d is included and k is identified modulo 2*pi/d.
class KGrid {
 public:
  KGrid(double spacing, int m);
  explicit KGrid(const OscParams& p) : KGrid(p.d, p.m) {}

  double spacing() const { return d_; }
  int size() const { return m_; }
  double dk() const { return dk_; }
  double weight() const { return dk_; }  // uniform quadrature weight
  double point(int j) const { return -pi_over_d_ + (j + 1) * dk_; }
  std::vector<double> points() const;

  friend bool operator==(const KGrid& a, const KGrid& b) {
    return a.d_ == b.d_ && a.m_ == b.m_;
  }

 private:
  double d_;
  int m_;
  double dk_;
  double pi_over_d_;
};

}  // namespace latosc
