#include "latosc/transforms.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "latosc/numerics/fourier.hpp"
#include "latosc/numerics/quadrature.hpp"

namespace latosc {

namespace {

void require_same_grid(const KGrid& a, const KGrid& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

}  // namespace

cplx inner_product(const WaveK& a, const WaveK& b) {
  require_same_grid(a.grid, b.grid, "inner_product");
  std::vector<cplx> prod(a.values.size());
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = std::conj(a.values[j]) * b.values[j];
  return a.grid.weight() * num::compensated_sum(prod);
}

double norm(const WaveK& psi) {
  std::vector<double> sq(psi.values.size());
  for (std::size_t j = 0; j < sq.size(); ++j) sq[j] = std::norm(psi.values[j]);
  return std::sqrt(psi.grid.weight() * num::compensated_sum(sq));
}

double norm_sq_sites(const WaveX& psi) {
  std::vector<double> sq(psi.values.size());
  for (std::size_t j = 0; j < sq.size(); ++j) sq[j] = std::norm(psi.values[j]);
  return num::compensated_sum(sq);
}

std::vector<cplx> to_full_sites(const WaveK& psi) {
  const int m = psi.grid.size();
  // rotate right by one: the k-grid starts at j=0 <-> phase index 1
  std::vector<cplx> work(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) {
    work[static_cast<std::size_t>(l)] = psi.values[static_cast<std::size_t>((l - 1 + m) % m)];
  }
  num::dft_inplace(work, /*inverse=*/true);
  const double scale =
      std::sqrt(psi.grid.spacing() / (2.0 * std::numbers::pi)) * psi.grid.dk();
  for (int idx = 0; idx < m; ++idx) {
    double sign = (idx % 2 == 0) ? 1.0 : -1.0;  // (-1)^n, parity of n == parity of idx
    work[static_cast<std::size_t>(idx)] *= scale * sign;
  }
  return work;
}

WaveK from_full_sites(const std::vector<cplx>& sites, const KGrid& grid) {
  const int m = grid.size();
  if (static_cast<int>(sites.size()) != m) {
    throw std::invalid_argument("from_full_sites: need M site amplitudes");
  }
  std::vector<cplx> work(static_cast<std::size_t>(m));
  for (int idx = 0; idx < m; ++idx) {
    double sign = (idx % 2 == 0) ? 1.0 : -1.0;
    work[static_cast<std::size_t>(idx)] = sign * sites[static_cast<std::size_t>(idx)];
  }
  num::dft_inplace(work, /*inverse=*/false);
  const double scale = std::sqrt(grid.spacing() / (2.0 * std::numbers::pi));
  std::vector<cplx> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    out[static_cast<std::size_t>(j)] = scale * work[static_cast<std::size_t>((j + 1) % m)];
  }
  return WaveK(grid, std::move(out));
}

WaveX to_sites(const WaveK& psi, int n_max) {
  const int m = psi.grid.size();
  if (2 * n_max + 1 > m) {
    std::fprintf(stderr,
                 "latosc: to_sites window 2*%d+1 exceeds M=%d; sites beyond one "
                 "period alias\n",
                 n_max, m);
  }
  std::vector<cplx> full = to_full_sites(psi);
  std::vector<cplx> vals(static_cast<std::size_t>(2 * n_max + 1));
  for (int n = -n_max; n <= n_max; ++n) {
    int idx = ((n % m) + m) % m;
    vals[static_cast<std::size_t>(n + n_max)] = full[static_cast<std::size_t>(idx)];
  }
  return WaveX(psi.grid.spacing(), n_max, std::move(vals));
}

WaveK from_sites(const WaveX& psi, const KGrid& grid) {
  if (psi.spacing != grid.spacing()) {
    throw std::invalid_argument("from_sites: site spacing must match grid spacing");
  }
  const int m = grid.size();
  std::vector<cplx> full(static_cast<std::size_t>(m), cplx{});
  for (int n = -psi.n_max; n <= psi.n_max; ++n) {
    int idx = ((n % m) + m) % m;
    full[static_cast<std::size_t>(idx)] += psi.at_site(n);
  }
  return from_full_sites(full, grid);
}

cplx inner_product(const Wave2D& a, const Wave2D& b) {
  require_same_grid(a.grid, b.grid, "inner_product(2d)");
  std::vector<cplx> prod(a.values.size());
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = std::conj(a.values[j]) * b.values[j];
  double w = a.grid.weight();
  return w * w * num::compensated_sum(prod);
}

double norm(const Wave2D& psi) {
  std::vector<double> sq(psi.values.size());
  for (std::size_t j = 0; j < sq.size(); ++j) sq[j] = std::norm(psi.values[j]);
  return psi.grid.weight() * std::sqrt(num::compensated_sum(sq));
}

}  // namespace latosc
