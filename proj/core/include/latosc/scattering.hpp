#pragma once

#include <vector>

namespace latosc::ring {

// Zero-energy scattering off a static delta impurity in the periodic
// potential dual to the lattice oscillator.  Everything is dimensionless:
// angles theta = x/L, depth v0 = m V0 L^2 / hbar^2, scattering lengths
// reported as a_bar = m g a / hbar^2 (g drops out), energies in
// hbar^2/(m L^2).
struct ScatterParams {
  double v0;            // >= 0
  double theta0;        // impurity position x0/L, wrapped into (-pi, pi]
  int quad_points = 4096;

  double lambda_l() const;  // sqrt(2 v0)
};

// V(theta)/[hbar^2/(m L^2)] = v0 sin^2 theta - sqrt(v0/2) cos theta; the
// 2pi-periodic potential whose zero-energy ground state is exp(lambda cos).
double potential(double theta, double v0);

// Antiderivative Phi(theta) = int_0^theta exp(-2 lambda cos t) dt, built
// spectrally: uniform-panel samples of the periodic integrand give its
// cosine coefficients, which integrate term by term.  Phi(0) = 0, Phi odd,
// Phi(theta + 2pi) = Phi(theta) + 2 pi beta, with beta the period mean of
// the integrand.
class PhiSeries {
 public:
  PhiSeries(double lambda, int resolution);

  double beta() const { return beta_; }
  double operator()(double theta) const;      // Phi(theta)
  double integrand(double theta) const;       // exp(-2 lambda cos theta) = Phi'

 private:
  double lambda_;
  double beta_;
  std::vector<double> cos_coeff_;  // a_m, m >= 1
};

double aperiodic_phi(double theta, double lambda, int resolution);

// a_bar(theta0) = -[ -lambda sin(theta0) Phi(theta0) + exp(-2 lambda cos theta0) ],
// the analytic expansion of -(psi0 Phi)'/psi0 at the (wrapped) impurity
// position.  Finite for every theta0 and v0.
double scattering_length(const ScatterParams& params);

struct ScatterResult {
  std::vector<double> theta0;  // uniform over (-pi, pi]
  std::vector<double> a_bar;
  double beta;
  double v0;
  int resolution;
};

ScatterResult scattering_sweep(double v0, int n_theta, int resolution = 4096);

// Inset curve: a_bar(0) = -exp(-2 lambda) as a function of lambda_L
// (proportional to the period L at fixed V0), computed through the same
// machinery as the sweep.
struct InsetPoint {
  double lambda_l;
  double a_bar0;
};
std::vector<InsetPoint> scattering_inset(double lambda_max, int n_points,
                                         int resolution = 4096);

}  // namespace latosc::ring
