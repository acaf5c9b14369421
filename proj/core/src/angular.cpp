#include "latosc/angular.hpp"

#include <cmath>
#include <stdexcept>

namespace latosc::osc {

Wave2D tensor_product(const WaveK& a, const WaveK& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("tensor_product: grid mismatch");
  const int m = a.grid.size();
  Wave2D out = Wave2D::zeros(a.grid);
  for (int i1 = 0; i1 < m; ++i1) {
    for (int i2 = 0; i2 < m; ++i2) {
      out.at(i1, i2) = a.values[static_cast<std::size_t>(i1)] * b.values[static_cast<std::size_t>(i2)];
    }
  }
  return out;
}

Wave2D apply_axis(LadderOp op, const Wave2D& psi, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("apply_axis: axis must be 1 or 2");
  const int m = psi.grid.size();
  Wave2D out = Wave2D::zeros(psi.grid);
  std::vector<cplx> line(static_cast<std::size_t>(m));
  for (int fixed = 0; fixed < m; ++fixed) {
    for (int r = 0; r < m; ++r) {
      line[static_cast<std::size_t>(r)] = (axis == 1) ? psi.at(r, fixed) : psi.at(fixed, r);
    }
    WaveK w(psi.grid, line);
    WaveK res = apply_operator(op, w);
    for (int r = 0; r < m; ++r) {
      if (axis == 1) {
        out.at(r, fixed) = res.values[static_cast<std::size_t>(r)];
      } else {
        out.at(fixed, r) = res.values[static_cast<std::size_t>(r)];
      }
    }
  }
  return out;
}

namespace {

Wave2D lincomb(const Wave2D& a, cplx ca, const Wave2D& b, cplx cb) {
  Wave2D out = Wave2D::zeros(a.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = ca * a.values[i] + cb * b.values[i];
  }
  return out;
}

}  // namespace

Wave2D angular_apply(const Wave2D& psi) {
  Wave2D t1 = apply_axis(LadderOp::annihilate, apply_axis(LadderOp::create, psi, 2), 1);
  Wave2D t2 = apply_axis(LadderOp::create, apply_axis(LadderOp::annihilate, psi, 2), 1);
  return lincomb(t1, cplx(0.0, 1.0), t2, cplx(0.0, -1.0));
}

Wave2D angular_apply_xp(const Wave2D& psi) {
  Wave2D t1 = apply_axis(LadderOp::position, apply_axis(LadderOp::momentum, psi, 2), 1);
  Wave2D t2 = apply_axis(LadderOp::momentum, apply_axis(LadderOp::position, psi, 2), 1);
  return lincomb(t1, 1.0, t2, -1.0);
}

Wave2D number_sum_apply(const Wave2D& psi) {
  Wave2D n1 = apply_axis(LadderOp::create, apply_axis(LadderOp::annihilate, psi, 1), 1);
  Wave2D n2 = apply_axis(LadderOp::create, apply_axis(LadderOp::annihilate, psi, 2), 2);
  return lincomb(n1, 1.0, n2, 1.0);
}

Wave2D smooth_test_state(double d) {
  if (!(d > 0.0)) throw std::invalid_argument("smooth_test_state: spacing must be positive");
  int m = 8;
  while (m < 64.0 / d) m *= 2;
  KGrid grid(d, m);
  const double gamma = 1.0 / (d * d);
  const double n0 = std::round(1.0 / d);
  Wave2D out = Wave2D::zeros(grid);
  for (int i1 = 0; i1 < m; ++i1) {
    double k1d = grid.point(i1) * d;
    cplx row = std::exp(cplx(gamma * (std::cos(k1d) - 1.0), n0 * k1d));
    for (int i2 = 0; i2 < m; ++i2) {
      double k2d = grid.point(i2) * d;
      out.at(i1, i2) = row * std::exp(gamma * (std::cos(k2d) - 1.0));
    }
  }
  return out;
}

std::vector<double> angular_nonconservation(std::span<const double> d_values) {
  std::vector<double> out;
  out.reserve(d_values.size());
  for (double d : d_values) {
    Wave2D psi = smooth_test_state(d);
    Wave2D ln = angular_apply(number_sum_apply(psi));
    Wave2D nl = number_sum_apply(angular_apply(psi));
    Wave2D comm = lincomb(ln, 1.0, nl, -1.0);
    out.push_back(norm(comm) / norm(psi));
  }
  return out;
}

}  // namespace latosc::osc
