#include "latosc/manybody.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latosc/numerics/rng.hpp"

namespace latosc::ring {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const RingParams& p) {
  if (p.n < 2) throw std::invalid_argument("RingParams: need at least two particles");
  if (!(p.coeff_c > 0.0)) throw std::invalid_argument("RingParams: coeff_c must be positive");
}

double wrap_angle(double t) {
  double w = std::remainder(t, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

// sum_{j != i} sin(theta_i - theta_j)
double pair_sin_sum(std::span<const double> theta, int i) {
  double s = 0.0;
  for (int j = 0; j < static_cast<int>(theta.size()); ++j) {
    if (j == i) continue;
    s += std::sin(theta[static_cast<std::size_t>(i)] - theta[static_cast<std::size_t>(j)]);
  }
  return s;
}

// log psi0(theta with theta_i displaced by dt) - log psi0(theta): only the
// pair terms containing i move.
double log_psi_shift(std::span<const double> theta, int i, double dt, double clam) {
  double s = 0.0;
  for (int j = 0; j < static_cast<int>(theta.size()); ++j) {
    if (j == i) continue;
    double diff = theta[static_cast<std::size_t>(i)] - theta[static_cast<std::size_t>(j)];
    s += std::cos(diff + dt) - std::cos(diff);
  }
  return clam * s;
}

}  // namespace

double log_ground_state(std::span<const double> theta, const RingParams& params) {
  check_params(params);
  if (static_cast<int>(theta.size()) != params.n) {
    throw std::invalid_argument("log_ground_state: need N positions");
  }
  double s = 0.0;
  for (int i = 0; i < params.n; ++i) {
    for (int j = i + 1; j < params.n; ++j) {
      s += std::cos(theta[static_cast<std::size_t>(i)] - theta[static_cast<std::size_t>(j)]);
    }
  }
  return params.coeff_c * params.lambda_tilde * s;
}

double annihilation_residual(const RingParams& params, int n_probe, double h,
                             std::uint64_t seed) {
  check_params(params);
  if (n_probe < 1) throw std::invalid_argument("annihilation_residual: n_probe must be >= 1");
  if (!(h > 0.0)) throw std::invalid_argument("annihilation_residual: h must be positive");
  num::SplitMix64 rng(seed);
  const double clam = params.coeff_c * params.lambda_tilde;
  std::vector<double> theta(static_cast<std::size_t>(params.n));
  double worst = 0.0;
  for (int probe = 0; probe < n_probe; ++probe) {
    for (auto& t : theta) t = rng.uniform(-kPi, kPi);
    for (int i = 0; i < params.n; ++i) {
      // (psi(+h) - psi(-h)) / (2 h psi) via exponentiated log differences
      double up = std::exp(log_psi_shift(theta, i, h, clam));
      double dn = std::exp(log_psi_shift(theta, i, -h, clam));
      double dlog = (up - dn) / (2.0 * h);
      double r = dlog + params.lambda_tilde * pair_sin_sum(theta, i);
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double ground_energy(const RingParams& params, int quad_points, double h) {
  check_params(params);
  if (params.n > 4) {
    throw std::invalid_argument("ground_energy: tensor quadrature supports N <= 4 only");
  }
  if (quad_points < 8) throw std::invalid_argument("ground_energy: quad_points must be >= 8");
  const int g = quad_points;
  const int n = params.n;
  const double clam = params.coeff_c * params.lambda_tilde;
  const double log_max = clam * (n * (n - 1) / 2);

  std::vector<double> theta(static_cast<std::size_t>(n), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  double num_acc = 0.0;
  double den_acc = 0.0;
  while (true) {
    for (int i = 0; i < n; ++i) {
      theta[static_cast<std::size_t>(i)] = -kPi + (idx[static_cast<std::size_t>(i)] + 1) * (2.0 * kPi / g);
    }
    double w = std::exp(2.0 * (log_ground_state(theta, params) - log_max));
    double local = 0.0;
    for (int i = 0; i < n; ++i) {
      double dlog =
          (log_psi_shift(theta, i, h, clam) - log_psi_shift(theta, i, -h, clam)) / (2.0 * h);
      double ai = dlog + params.lambda_tilde * pair_sin_sum(theta, i);
      local += ai * ai;
    }
    num_acc += w * local;
    den_acc += w;

    int pos = 0;
    while (pos < n && ++idx[static_cast<std::size_t>(pos)] == g) {
      idx[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return num_acc / den_acc;
}

double PairCorr::theta_center(int m) const {
  return -kPi + (m + 0.5) * (2.0 * kPi / g);
}

PairCorr pair_correlation_quad(const RingParams& params, int g) {
  check_params(params);
  if (params.n < 2 || params.n > 4) {
    throw std::invalid_argument("pair_correlation_quad: N must be 2, 3 or 4");
  }
  if (g < 32) throw std::invalid_argument("pair_correlation_quad: mesh must be >= 32");

  const double clam = params.coeff_c * params.lambda_tilde;
  // pair factor on the difference index; bin centers differ by exact
  // multiples of dtheta
  std::vector<double> pf(static_cast<std::size_t>(g));
  for (int t = 0; t < g; ++t) {
    pf[static_cast<std::size_t>(t)] = std::exp(2.0 * clam * std::cos(t * (2.0 * kPi / g)));
  }
  auto pdiff = [&](int a, int b) {
    int t = a - b;
    if (t < 0) t += g;
    return pf[static_cast<std::size_t>(t)];
  };

  PairCorr out;
  out.g = g;
  out.method = PairCorrMethod::quadrature;
  out.params = params;
  out.values.assign(static_cast<std::size_t>(g) * static_cast<std::size_t>(g), 0.0);

  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b) {
      double v = 0.0;
      if (params.n == 2) {
        v = pdiff(a, b);
      } else if (params.n == 3) {
        double s = 0.0;
        for (int c = 0; c < g; ++c) s += pdiff(a, c) * pdiff(b, c);
        v = pdiff(a, b) * s;
      } else {
        double s = 0.0;
        for (int c = 0; c < g; ++c) {
          double qc = pdiff(a, c) * pdiff(b, c);
          double inner = 0.0;
          for (int dd = 0; dd < g; ++dd) {
            inner += pdiff(a, dd) * pdiff(b, dd) * pdiff(c, dd);
          }
          s += qc * inner;
        }
        v = pdiff(a, b) * s;
      }
      out.values[static_cast<std::size_t>(a) * g + b] = v;
    }
  }
  double peak = *std::max_element(out.values.begin(), out.values.end());
  for (auto& v : out.values) v /= peak;
  return out;
}

PairCorr pair_correlation_mc(const RingParams& params, const McOptions& opts) {
  check_params(params);
  if (opts.n_samples < 10000) {
    throw std::invalid_argument("pair_correlation_mc: need >= 1e4 sweeps per chain");
  }
  if (opts.n_chains < 2) throw std::invalid_argument("pair_correlation_mc: need >= 2 chains");
  if (opts.g < 8) throw std::invalid_argument("pair_correlation_mc: mesh must be >= 8");

  const int g = opts.g;
  const int n = params.n;
  const double clam = params.coeff_c * params.lambda_tilde;
  const double dtheta = 2.0 * kPi / g;
  const long burn = opts.n_samples / 10;
  const long measure = opts.n_samples - burn;
  const std::size_t cells = static_cast<std::size_t>(g) * static_cast<std::size_t>(g);

  auto cell_of = [&](double t) {
    int m = static_cast<int>((t + kPi) / dtheta);
    if (m >= g) m = g - 1;
    if (m < 0) m = 0;
    return m;
  };

  std::vector<std::vector<double>> chain_density(static_cast<std::size_t>(opts.n_chains));
  for (int chain = 0; chain < opts.n_chains; ++chain) {
    num::SplitMix64 rng = num::SplitMix64(opts.seed).derive(static_cast<std::uint64_t>(chain));
    std::vector<double> theta(static_cast<std::size_t>(n));
    for (auto& t : theta) t = rng.uniform(-kPi, kPi);

    double width = 1.0;
    long proposals = 0, accepts = 0;
    long block_prop = 0, block_acc = 0;
    long post_prop = 0, post_acc = 0;

    std::vector<double> hist(cells, 0.0);
    for (long sweep = 0; sweep < opts.n_samples; ++sweep) {
      const bool tuning = sweep < burn;
      for (int step = 0; step < n; ++step) {
        int i = step;  // cycle through particles
        double dt = width * rng.uniform(-1.0, 1.0);
        double dlog2 = 2.0 * log_psi_shift(theta, i, dt, clam);
        bool accept = dlog2 >= 0.0 || rng.next_double() < std::exp(dlog2);
        if (accept) {
          theta[static_cast<std::size_t>(i)] =
              wrap_angle(theta[static_cast<std::size_t>(i)] + dt);
        }
        ++proposals;
        accepts += accept;
        if (tuning) {
          ++block_prop;
          block_acc += accept;
          if (block_prop == 200) {
            double rate = static_cast<double>(block_acc) / block_prop;
            if (rate < 0.3) width *= 0.8;
            if (rate > 0.5) width *= 1.25;
            width = std::clamp(width, 1e-3, kPi);
            block_prop = block_acc = 0;
          }
        } else {
          ++post_prop;
          post_acc += accept;
        }
      }
      if (!tuning) {
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            int a = cell_of(theta[static_cast<std::size_t>(i)]);
            int b = cell_of(theta[static_cast<std::size_t>(j)]);
            hist[static_cast<std::size_t>(a) * g + b] += 1.0;
          }
        }
      }
    }
    if (post_prop > 0 && static_cast<double>(post_acc) / post_prop < 0.05) {
      throw std::runtime_error("pair_correlation_mc: pathological acceptance (< 0.05)");
    }
    const double total = static_cast<double>(measure) * (n * (n - 1) / 2);
    for (auto& v : hist) v /= total;
    chain_density[static_cast<std::size_t>(chain)] = std::move(hist);
  }

  PairCorr out;
  out.g = g;
  out.method = PairCorrMethod::monte_carlo;
  out.params = params;
  out.values.assign(cells, 0.0);
  out.stderr_.assign(cells, 0.0);
  const double c = static_cast<double>(opts.n_chains);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    double mean = 0.0;
    for (const auto& ch : chain_density) mean += ch[cell];
    mean /= c;
    double var = 0.0;
    for (const auto& ch : chain_density) {
      double dlt = ch[cell] - mean;
      var += dlt * dlt;
    }
    out.values[cell] = mean;
    out.stderr_[cell] = std::sqrt(var / (c * (c - 1.0)));
  }
  double peak = *std::max_element(out.values.begin(), out.values.end());
  for (auto& v : out.values) v /= peak;
  for (auto& v : out.stderr_) v /= peak;
  return out;
}

RadialProfile radial_profile(const PairCorr& pc) {
  const int g = pc.g;
  RadialProfile out;
  out.delta.resize(static_cast<std::size_t>(g));
  out.rho.resize(static_cast<std::size_t>(g));
  const bool has_err = !pc.stderr_.empty();
  if (has_err) out.stderr_.resize(static_cast<std::size_t>(g));

  std::vector<int> order(static_cast<std::size_t>(g));
  for (int m = 0; m < g; ++m) {
    double delta = m * (2.0 * kPi / g);
    if (delta > kPi) delta -= 2.0 * kPi;
    double acc = 0.0, err2 = 0.0;
    for (int a = 0; a < g; ++a) {
      int b = a - m;
      if (b < 0) b += g;
      acc += pc.rho(a, b);
      if (has_err) {
        double e = pc.stderr_[static_cast<std::size_t>(a) * g + b];
        err2 += e * e;
      }
    }
    out.delta[static_cast<std::size_t>(m)] = delta;
    out.rho[static_cast<std::size_t>(m)] = acc / g;
    if (has_err) out.stderr_[static_cast<std::size_t>(m)] = std::sqrt(err2) / g;
    order[static_cast<std::size_t>(m)] = m;
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return out.delta[static_cast<std::size_t>(x)] < out.delta[static_cast<std::size_t>(y)];
  });
  RadialProfile sorted;
  sorted.delta.reserve(static_cast<std::size_t>(g));
  sorted.rho.reserve(static_cast<std::size_t>(g));
  if (has_err) sorted.stderr_.reserve(static_cast<std::size_t>(g));
  for (int m : order) {
    sorted.delta.push_back(out.delta[static_cast<std::size_t>(m)]);
    sorted.rho.push_back(out.rho[static_cast<std::size_t>(m)]);
    if (has_err) sorted.stderr_.push_back(out.stderr_[static_cast<std::size_t>(m)]);
  }
  double peak = *std::max_element(sorted.rho.begin(), sorted.rho.end());
  for (auto& v : sorted.rho) v /= peak;
  if (has_err) {
    for (auto& v : sorted.stderr_) v /= peak;
  }
  return sorted;
}

double circular_variance(const RadialProfile& profile) {
  double re = 0.0, im = 0.0, tot = 0.0;
  for (std::size_t m = 0; m < profile.delta.size(); ++m) {
    re += profile.rho[m] * std::cos(profile.delta[m]);
    im += profile.rho[m] * std::sin(profile.delta[m]);
    tot += profile.rho[m];
  }
  return 1.0 - std::hypot(re, im) / tot;
}

}  // namespace latosc::ring
