#include "latosc/grid.hpp"

#include <numbers>
#include <stdexcept>

namespace latosc {

KGrid::KGrid(double spacing, int m) : d_(spacing), m_(m) {
  if (!(spacing > 0.0)) throw std::invalid_argument("KGrid: spacing must be positive");
  if (m < 8 || m % 2 != 0) throw std::invalid_argument("KGrid: M must be even and >= 8");
  pi_over_d_ = std::numbers::pi / d_;
  dk_ = 2.0 * std::numbers::pi / (m_ * d_);
}

std::vector<double> KGrid::points() const {
  std::vector<double> p(static_cast<std::size_t>(m_));
  for (int j = 0; j < m_; ++j) p[static_cast<std::size_t>(j)] = point(j);
  return p;
}

}  // namespace latosc
