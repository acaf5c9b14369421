#include "latosc/numerics/banded.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace latosc::num {

BandedSym::BandedSym(int dim, int half_bandwidth, bool periodic)
    : dim_(dim), hbw_(half_bandwidth), periodic_(periodic) {
  if (dim < 1) throw std::invalid_argument("BandedSym: dim must be positive");
  if (half_bandwidth < 0 || half_bandwidth > 2) {
    throw std::invalid_argument("BandedSym: half_bandwidth must be in [0, 2]");
  }
  if (periodic && dim < 2 * half_bandwidth + 1) {
    throw std::invalid_argument("BandedSym: periodic storage needs dim > 2*half_bandwidth");
  }
  bands_.resize(static_cast<std::size_t>(hbw_) + 1);
  for (int r = 0; r <= hbw_; ++r) {
    int len = periodic_ ? dim_ : dim_ - r;
    bands_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(std::max(len, 0)), 0.0);
  }
}

double BandedSym::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  int r = j - i;
  if (r <= hbw_) {
    if (!periodic_) return r <= hbw_ && j < dim_ ? band(r, i) : 0.0;
    return band(r, i);
  }
  if (periodic_) {
    // wrapped coupling: A(i, j) with j - i > hbw corresponds to
    // band(dim - (j - i)) anchored at j
    int rw = dim_ - r;
    if (rw <= hbw_ && rw >= 1) return band(rw, j);
  }
  return 0.0;
}

std::vector<double> BandedSym::matvec(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("BandedSym::matvec: size mismatch");
  std::vector<double> y(static_cast<std::size_t>(dim_), 0.0);
  for (int i = 0; i < dim_; ++i) y[static_cast<std::size_t>(i)] = band(0, i) * x[static_cast<std::size_t>(i)];
  for (int r = 1; r <= hbw_; ++r) {
    const auto& b = bands_[static_cast<std::size_t>(r)];
    int len = static_cast<int>(b.size());
    for (int i = 0; i < len; ++i) {
      int j = periodic_ ? (i + r) % dim_ : i + r;
      y[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
  }
  return y;
}

std::vector<std::vector<double>> BandedSym::to_dense() const {
  std::vector<std::vector<double>> a(static_cast<std::size_t>(dim_),
                                     std::vector<double>(static_cast<std::size_t>(dim_), 0.0));
  for (int i = 0; i < dim_; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = band(0, i);
  for (int r = 1; r <= hbw_; ++r) {
    const auto& b = bands_[static_cast<std::size_t>(r)];
    int len = static_cast<int>(b.size());
    for (int i = 0; i < len; ++i) {
      int j = periodic_ ? (i + r) % dim_ : i + r;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
    }
  }
  return a;
}

double BandedSym::norm_inf() const {
  double best = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (int j = std::max(0, i - hbw_); j <= std::min(dim_ - 1, i + hbw_); ++j) {
      row += std::abs(at(i, j));
    }
    if (periodic_) {
      for (int r = 1; r <= hbw_; ++r) {
        int j = (i + dim_ - r) % dim_;
        if (std::abs(j - i) > hbw_) row += std::abs(at(i, j));
        j = (i + r) % dim_;
        if (std::abs(j - i) > hbw_) row += std::abs(at(i, j));
      }
    }
    best = std::max(best, row);
  }
  return best;
}

}  // namespace latosc::num
