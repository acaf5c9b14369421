#pragma once

#include <span>
#include <vector>

namespace latosc::num {

// Real symmetric banded matrix, half-bandwidth <= 2.  Storage is the
// diagonal plus upper bands: band(r)[i] = A(i, i+r).  With `periodic` set,
// column indices wrap modulo dim, which adds the corner couplings of a
// periodic finite-difference stencil.
class BandedSym {
 public:
  BandedSym(int dim, int half_bandwidth, bool periodic = false);

  int dim() const { return dim_; }
  int half_bandwidth() const { return hbw_; }
  bool periodic() const { return periodic_; }

  double& band(int r, int i) { return bands_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]; }
  double band(int r, int i) const { return bands_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]; }

  // Dense element access (zero outside the band).
  double at(int i, int j) const;

  std::vector<double> matvec(std::span<const double> x) const;
  std::vector<std::vector<double>> to_dense() const;

  // Infinity-norm (exact for this storage).
  double norm_inf() const;

 private:
  int dim_;
  int hbw_;
  bool periodic_;
  std::vector<std::vector<double>> bands_;  // bands_[r], r = 0..hbw_
};

}  // namespace latosc::num
