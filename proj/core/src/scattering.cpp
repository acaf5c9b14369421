#include "latosc/scattering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latosc/numerics/quadrature.hpp"

namespace latosc::ring {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_to_zone(double theta) {
  // wrap into (-pi, pi]; the scattering length is defined on the central
  // zone and extended periodically
  double t = std::remainder(theta, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

}  // namespace

double ScatterParams::lambda_l() const { return std::sqrt(2.0 * v0); }

double potential(double theta, double v0) {
  if (!(v0 >= 0.0)) throw std::invalid_argument("potential: v0 must be >= 0");
  double s = std::sin(theta);
  return v0 * s * s - std::sqrt(0.5 * v0) * std::cos(theta);
}

PhiSeries::PhiSeries(double lambda, int resolution) : lambda_(lambda) {
  if (resolution < 64) throw std::invalid_argument("PhiSeries: resolution must be >= 64");
  const int r = resolution;
  // uniform panels over one period; the integrand is even, so only cosine
  // coefficients survive
  std::vector<double> g(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    double t = -kPi + (i + 1) * (2.0 * kPi / r);
    g[static_cast<std::size_t>(i)] = std::exp(-2.0 * lambda * std::cos(t));
  }
  beta_ = num::compensated_sum(g) / r;

  const int m_cap = r / 2;
  cos_coeff_.reserve(64);
  const double floor_mag = 1e-17 * std::max(beta_, 1.0);
  for (int m = 1; m <= m_cap; ++m) {
    std::vector<double> prod(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      double t = -kPi + (i + 1) * (2.0 * kPi / r);
      prod[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] * std::cos(m * t);
    }
    double am = 2.0 * num::compensated_sum(prod) / r;
    cos_coeff_.push_back(am);
    // super-exponential coefficient decay: stop once at round-off level
    if (std::abs(am) < floor_mag && m > 4) break;
  }
}

double PhiSeries::operator()(double theta) const {
  num::Accumulator acc;
  acc.add(beta_ * theta);
  for (std::size_t m = 0; m < cos_coeff_.size(); ++m) {
    double mm = static_cast<double>(m + 1);
    acc.add(cos_coeff_[m] * std::sin(mm * theta) / mm);
  }
  return acc.value();
}

double PhiSeries::integrand(double theta) const {
  return std::exp(-2.0 * lambda_ * std::cos(theta));
}

double aperiodic_phi(double theta, double lambda, int resolution) {
  return PhiSeries(lambda, resolution)(theta);
}

double scattering_length(const ScatterParams& params) {
  if (!(params.v0 >= 0.0)) throw std::invalid_argument("scattering_length: v0 must be >= 0");
  const double lam = params.lambda_l();
  const double t0 = wrap_to_zone(params.theta0);
  PhiSeries phi(lam, params.quad_points);
  double bracket = -lam * std::sin(t0) * phi(t0) + phi.integrand(t0);
  return -bracket;
}

ScatterResult scattering_sweep(double v0, int n_theta, int resolution) {
  if (n_theta < 16) throw std::invalid_argument("scattering_sweep: n_theta must be >= 16");
  const double lam = std::sqrt(2.0 * v0);
  PhiSeries phi(lam, resolution);
  ScatterResult out;
  out.v0 = v0;
  out.beta = phi.beta();
  out.resolution = resolution;
  out.theta0.resize(static_cast<std::size_t>(n_theta));
  out.a_bar.resize(static_cast<std::size_t>(n_theta));
  for (int i = 0; i < n_theta; ++i) {
    double t0 = -kPi + (i + 1) * (2.0 * kPi / n_theta);
    double bracket = -lam * std::sin(t0) * phi(t0) + phi.integrand(t0);
    out.theta0[static_cast<std::size_t>(i)] = t0;
    out.a_bar[static_cast<std::size_t>(i)] = -bracket;
  }
  return out;
}

std::vector<InsetPoint> scattering_inset(double lambda_max, int n_points, int resolution) {
  if (n_points < 2) throw std::invalid_argument("scattering_inset: need >= 2 points");
  std::vector<InsetPoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    double lam = lambda_max * i / (n_points - 1);
    ScatterParams p{0.5 * lam * lam, 0.0, resolution};
    out.push_back({lam, scattering_length(p)});
  }
  return out;
}

}  // namespace latosc::ring
