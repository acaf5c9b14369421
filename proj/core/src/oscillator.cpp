#include "latosc/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "latosc/numerics/eigh.hpp"
#include "latosc/numerics/quadrature.hpp"
#include "latosc/numerics/rng.hpp"
#include "latosc/numerics/stencil.hpp"

namespace latosc::osc {

namespace {

WaveK apply_position(const WaveK& psi) {
  const int m = psi.grid.size();
  const double d = psi.grid.spacing();
  std::vector<cplx> sites = to_full_sites(psi);
  for (int idx = 0; idx < m; ++idx) {
    int n = (idx <= m / 2) ? idx : idx - m;
    sites[static_cast<std::size_t>(idx)] *= n * d;
  }
  return from_full_sites(sites, psi.grid);
}

WaveK apply_momentum(const WaveK& psi) {
  const int m = psi.grid.size();
  const double d = psi.grid.spacing();
  std::vector<cplx> out(psi.values);
  for (int j = 0; j < m; ++j) {
    out[static_cast<std::size_t>(j)] *= std::sin(psi.grid.point(j) * d) / d;
  }
  return WaveK(psi.grid, std::move(out));
}

WaveK combine(const WaveK& a, cplx ca, const WaveK& b, cplx cb) {
  std::vector<cplx> out(a.values.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = ca * a.values[j] + cb * b.values[j];
  return WaveK(a.grid, std::move(out));
}

}  // namespace

WaveK apply_operator(LadderOp op, const WaveK& psi) {
  switch (op) {
    case LadderOp::position:
    case LadderOp::quad_x:
      return apply_position(psi);
    case LadderOp::momentum:
    case LadderOp::quad_p:
      return apply_momentum(psi);
    case LadderOp::annihilate: {
      const double r = 1.0 / std::sqrt(2.0);
      return combine(apply_position(psi), r, apply_momentum(psi), cplx(0.0, r));
    }
    case LadderOp::create: {
      const double r = 1.0 / std::sqrt(2.0);
      return combine(apply_position(psi), r, apply_momentum(psi), cplx(0.0, -r));
    }
  }
  throw std::invalid_argument("apply_operator: unknown operator");
}

WaveK commutator_xp(const WaveK& psi) {
  WaveK xp = apply_position(apply_momentum(psi));
  WaveK px = apply_momentum(apply_position(psi));
  return combine(xp, 1.0, px, -1.0);
}

OperatorMatrix number_matrix(Representation rep, const OscParams& params, int order) {
  const double gamma = params.gamma_d();
  if (rep == Representation::site) {
    const int dim = 2 * params.n_max + 1;
    num::BandedSym a(dim, 2, false);
    for (int i = 0; i < dim; ++i) {
      double x = (i - params.n_max) * params.d;
      a.band(0, i) = 0.5 * x * x + gamma / 4.0;
    }
    for (int i = 0; i + 1 < dim; ++i) a.band(1, i) = -0.25;
    for (int i = 0; i + 2 < dim; ++i) a.band(2, i) = -gamma / 8.0;
    return OperatorMatrix{rep, params, 0, std::move(a)};
  }
  if (order != 2 && order != 4) {
    throw std::invalid_argument("number_matrix: stencil order must be 2 or 4");
  }
  KGrid grid(params);
  const int m = grid.size();
  const double dk2 = grid.dk() * grid.dk();
  num::BandedSym a(m, order / 2, true);
  for (int j = 0; j < m; ++j) {
    double kd = grid.point(j) * params.d;
    double s = std::sin(kd);
    double diag = (order == 2) ? 2.0 / dk2 : 30.0 / (12.0 * dk2);
    a.band(0, j) = 0.5 * (diag + s * s * gamma - std::cos(kd));
  }
  if (order == 2) {
    for (int j = 0; j < m; ++j) a.band(1, j) = 0.5 * (-1.0 / dk2);
  } else {
    for (int j = 0; j < m; ++j) {
      a.band(1, j) = 0.5 * (-16.0 / (12.0 * dk2));
      a.band(2, j) = 0.5 * (1.0 / (12.0 * dk2));
    }
  }
  return OperatorMatrix{rep, params, order, std::move(a)};
}

SpectrumResult spectrum(const OperatorMatrix& op, int n_eigs, bool want_vectors, double tol) {
  num::EighOptions opts;
  opts.tol = tol;
  opts.vectors = want_vectors;
  num::EighResult r = num::eigh(op.mat, n_eigs, opts);
  SpectrumResult out;
  out.eigenvalues = std::move(r.values);
  out.eigenvectors = std::move(r.vectors);
  out.rep = op.rep;
  out.gamma_d = op.params.gamma_d();
  out.resolution = (op.rep == Representation::site) ? op.params.n_max : op.params.m;
  out.stencil_order = op.stencil_order;
  return out;
}

WaveK eigenvector_wavek(const SpectrumResult& s, const KGrid& grid, int idx) {
  if (s.rep != Representation::kspace) {
    throw std::invalid_argument("eigenvector_wavek: k-space spectra only");
  }
  const auto& v = s.eigenvectors.at(static_cast<std::size_t>(idx));
  if (static_cast<int>(v.size()) != grid.size()) {
    throw std::invalid_argument("eigenvector_wavek: grid size mismatch");
  }
  const double scale = 1.0 / std::sqrt(grid.weight());  // unit l2 -> unit ||.||_K
  std::vector<cplx> vals(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) vals[j] = scale * v[j];
  return WaveK(grid, std::move(vals));
}

WaveK ground_state_analytic(const KGrid& grid, double gamma_d) {
  if (!(gamma_d >= 0.0)) throw std::invalid_argument("ground_state_analytic: gamma_d < 0");
  const int m = grid.size();
  std::vector<cplx> vals(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    // exponent difference keeps the large-gamma prefactor from overflowing
    vals[static_cast<std::size_t>(j)] =
        std::exp(gamma_d * (std::cos(grid.point(j) * grid.spacing()) - 1.0));
  }
  WaveK psi(grid, std::move(vals));
  double n = norm(psi);
  for (auto& z : psi.values) z /= n;
  return psi;
}

UncertaintyReport uncertainty_report(const WaveK& psi) {
  double nrm = norm(psi);
  if (!(nrm > 0.0)) throw std::invalid_argument("uncertainty_report: zero-norm state");
  const double inv2 = 1.0 / (nrm * nrm);

  WaveK xpsi = apply_position(psi);
  double ex = (inner_product(psi, xpsi) * inv2).real();
  double ex2 = (inner_product(xpsi, xpsi) * inv2).real();

  const int m = psi.grid.size();
  const double d = psi.grid.spacing();
  std::vector<double> wp(static_cast<std::size_t>(m)), wp2(static_cast<std::size_t>(m)),
      wc(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    double kd = psi.grid.point(j) * d;
    double pj = std::sin(kd) / d;
    double w = std::norm(psi.values[static_cast<std::size_t>(j)]);
    wp[static_cast<std::size_t>(j)] = w * pj;
    wp2[static_cast<std::size_t>(j)] = w * pj * pj;
    wc[static_cast<std::size_t>(j)] = w * std::cos(kd);
  }
  const double wgt = psi.grid.weight() * inv2;
  double ep = wgt * num::compensated_sum(wp);
  double ep2 = wgt * num::compensated_sum(wp2);
  double ec = wgt * num::compensated_sum(wc);

  UncertaintyReport rep;
  rep.dx = std::sqrt(std::max(ex2 - ex * ex, 0.0));
  rep.dp = std::sqrt(std::max(ep2 - ep * ep, 0.0));
  rep.cos_abs = std::abs(ec);
  return rep;
}

double hermite_residual(const WaveK& psi, double n_tilde, int order) {
  const KGrid& grid = psi.grid;
  const int m = grid.size();
  const double d = grid.spacing();
  const double gamma = 1.0 / (d * d);
  WaveK psi0 = ground_state_analytic(grid, gamma);

  double pmax = 0.0;
  for (const auto& z : psi0.values) pmax = std::max(pmax, z.real());
  const double cut = std::max(1e-5 * pmax, 1e-300);

  // contiguous support window (psi0 is even in k and peaks at k = 0)
  int jlo = 0, jhi = m - 1;
  while (jlo < m && psi0.values[static_cast<std::size_t>(jlo)].real() < cut) ++jlo;
  while (jhi >= 0 && psi0.values[static_cast<std::size_t>(jhi)].real() < cut) --jhi;
  if (jhi - jlo + 1 < 2 * order + 2) {
    throw std::invalid_argument("hermite_residual: support window too small");
  }
  const bool full = (jlo == 0 && jhi == m - 1);

  std::vector<cplx> phi(static_cast<std::size_t>(jhi - jlo + 1));
  for (int j = jlo; j <= jhi; ++j) {
    phi[static_cast<std::size_t>(j - jlo)] =
        psi.values[static_cast<std::size_t>(j)] / psi0.values[static_cast<std::size_t>(j)].real();
  }
  auto d1 = num::central_diff(phi, 1, order, grid.dk(), full);
  auto d2 = num::central_diff(phi, 2, order, grid.dk(), full);

  const int trim = full ? 0 : order / 2;
  const int lo = trim, hi = static_cast<int>(phi.size()) - 1 - trim;
  double num_acc = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0;
  for (int i = lo; i <= hi; ++i) {
    double kd = grid.point(jlo + i) * d;
    cplx drift = 2.0 * (std::sin(kd) / d) * d1[static_cast<std::size_t>(i)];
    cplx r = d2[static_cast<std::size_t>(i)] - drift + 2.0 * n_tilde * phi[static_cast<std::size_t>(i)];
    num_acc += std::norm(r);
    t1 += std::norm(d2[static_cast<std::size_t>(i)]);
    t2 += std::norm(drift);
    t3 += std::norm(phi[static_cast<std::size_t>(i)]);
  }
  double denom = std::sqrt(t1) + std::sqrt(t2) + 2.0 * (std::abs(n_tilde) + 1.0) * std::sqrt(t3);
  if (denom == 0.0) return 0.0;
  return std::sqrt(num_acc) / denom;
}

WaveK random_band_limited(const KGrid& grid, int bandwidth, std::uint64_t seed) {
  if (bandwidth < 1 || 2 * bandwidth + 1 > grid.size()) {
    throw std::invalid_argument("random_band_limited: bandwidth out of range");
  }
  num::SplitMix64 rng(seed);
  std::vector<cplx> coef(static_cast<std::size_t>(2 * bandwidth + 1));
  for (auto& c : coef) c = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  WaveX wx(grid.spacing(), bandwidth, std::move(coef));
  WaveK psi = from_sites(wx, grid);
  double n = norm(psi);
  for (auto& z : psi.values) z /= n;
  return psi;
}

}  // namespace latosc::osc
