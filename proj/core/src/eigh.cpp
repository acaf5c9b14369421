#include "latosc/numerics/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "latosc/numerics/rng.hpp"

namespace latosc::num {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double pythag(double a, double b) { return std::hypot(a, b); }

// ---------------------------------------------------------------------------
// Dense Householder tridiagonalization (no eigenvector accumulation).
// Destroys `a`; returns diag d and off-diagonal e (e[i] couples i-1 <-> i).
// ---------------------------------------------------------------------------
void householder_tridiag(std::vector<std::vector<double>>& a, std::vector<double>& d,
                         std::vector<double>& e) {
  const int n = static_cast<int>(a.size());
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0.0;
    double scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(a[i][k]);
      if (scale == 0.0) {
        e[i] = a[i][l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i][k] /= scale;
          h += a[i][k] * a[i][k];
        }
        double f = a[i][l];
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a[i][l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
          for (int k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
          e[j] = g / h;
          f += e[j] * a[i][j];
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a[i][j];
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
        }
      }
    } else {
      e[i] = a[i][l];
    }
    d[i] = h;
  }
  for (int i = 0; i < n; ++i) d[i] = a[i][i];
  e[0] = 0.0;
}

// ---------------------------------------------------------------------------
// Band -> tridiagonal by Givens bulge-chasing (half-bandwidth 2, hard wall).
// The rotation in plane (q, q+1) annihilates the targeted outer-band entry;
// the bulge it creates at distance 3 is chased off the bottom.
// ---------------------------------------------------------------------------
class BandWork {
 public:
  explicit BandWork(const BandedSym& a) : n_(a.dim()) {
    for (int r = 0; r < 4; ++r) w_[r].assign(static_cast<std::size_t>(n_), 0.0);
    for (int r = 0; r <= a.half_bandwidth(); ++r) {
      for (int i = 0; i + r < n_; ++i) w_[r][static_cast<std::size_t>(i)] = a.band(r, i);
    }
  }

  double get(int i, int j) const {
    if (i > j) std::swap(i, j);
    int r = j - i;
    if (r > 3 || j >= n_ || i < 0) return 0.0;
    return w_[r][static_cast<std::size_t>(i)];
  }
  void set(int i, int j, double v) {
    if (i > j) std::swap(i, j);
    w_[j - i][static_cast<std::size_t>(i)] = v;
  }

  // Symmetric application of the rotation in the (q, q+1) plane:
  //   v_q' = c v_q + s v_p,  v_p' = -s v_q + c v_p.
  // Gathers the local window into a dense block, rotates, scatters back.
  void rotate(int q, double c, double s) {
    const int p = q + 1;
    const int lo = std::max(0, q - 3);
    const int hi = std::min(n_ - 1, p + 3);
    const int m = hi - lo + 1;
    double blk[9][9];
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) blk[i][j] = get(lo + i, lo + j);
    }
    const int ql = q - lo;
    const int pl = p - lo;
    for (int k = 0; k < m; ++k) {  // rows
      double x = blk[ql][k];
      double y = blk[pl][k];
      blk[ql][k] = c * x + s * y;
      blk[pl][k] = -s * x + c * y;
    }
    for (int k = 0; k < m; ++k) {  // columns
      double x = blk[k][ql];
      double y = blk[k][pl];
      blk[k][ql] = c * x + s * y;
      blk[k][pl] = -s * x + c * y;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) set(lo + i, lo + j, blk[i][j]);
    }
  }

  void extract_tridiag(std::vector<double>& d, std::vector<double>& e) const {
    d.assign(static_cast<std::size_t>(n_), 0.0);
    e.assign(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = w_[0][static_cast<std::size_t>(i)];
    for (int i = 1; i < n_; ++i) e[static_cast<std::size_t>(i)] = w_[1][static_cast<std::size_t>(i - 1)];
  }

  int size() const { return n_; }

 private:
  int n_;
  std::vector<double> w_[4];
};

void banded_tridiag(const BandedSym& a, std::vector<double>& d, std::vector<double>& e) {
  BandWork w(a);
  const int n = w.size();
  if (a.half_bandwidth() == 2) {
    for (int j = 0; j <= n - 3; ++j) {
      // annihilate the outer-band entry A(j+2, j) against pivot A(j+1, j)
      // with a rotation in the (j+1, j+2) plane
      double x = w.get(j + 1, j);
      double y = w.get(j + 2, j);
      if (y == 0.0) continue;
      double r = pythag(x, y);
      w.rotate(j + 1, x / r, y / r);
      // chase the distance-3 bulge: after rotating plane (t+2, t+3) to kill
      // the bulge at (t+3, t), a new bulge appears at (t+5, t+2)
      for (int t = j + 1; t + 3 <= n - 1; t += 2) {
        double px = w.get(t + 2, t);
        double py = w.get(t + 3, t);
        if (py == 0.0) break;
        double pr = pythag(px, py);
        w.rotate(t + 2, px / pr, py / pr);
      }
    }
  }
  w.extract_tridiag(d, e);
}

}  // namespace

// ---------------------------------------------------------------------------
// Implicit-shift QL for symmetric tridiagonal eigenvalues (EISPACK tql1).
// ---------------------------------------------------------------------------
std::vector<double> tql_eigenvalues(std::vector<double> d, std::vector<double> off,
                                    int max_iter, int* sweeps) {
  const int n = static_cast<int>(d.size());
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = off[static_cast<std::size_t>(i - 1)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;
  int total_sweeps = 0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == max_iter) {
          throw ConvergenceError("tql: implicit-shift QL failed to converge", total_sweeps);
        }
        ++total_sweeps;
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = pythag(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = pythag(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  if (sweeps) *sweeps = total_sweeps;
  return d;
}

namespace {

// ---------------------------------------------------------------------------
// Banded LU with partial pivoting (LAPACK dgbtrf storage: kl extra fill rows).
// ---------------------------------------------------------------------------
class BandedLU {
 public:
  // a must be non-periodic banded; shift is subtracted from the diagonal.
  BandedLU(const BandedSym& a, double shift) : n_(a.dim()), kl_(a.half_bandwidth()), ku_(a.half_bandwidth()) {
    ld_ = 2 * kl_ + ku_ + 1;
    ab_.assign(static_cast<std::size_t>(ld_) * static_cast<std::size_t>(n_), 0.0);
    ipiv_.assign(static_cast<std::size_t>(n_), 0);
    double scale = a.norm_inf() + std::abs(shift);
    tiny_ = std::max(scale, 1.0) * kEps * kEps;
    for (int j = 0; j < n_; ++j) {
      for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i) {
        at(i, j) = a.at(i, j) - (i == j ? shift : 0.0);
      }
    }
    factor();
  }

  std::vector<double> solve(std::span<const double> b) const {
    std::vector<double> x(b.begin(), b.end());
    for (int j = 0; j < n_ - 1; ++j) {
      int p = ipiv_[static_cast<std::size_t>(j)];
      if (p != j) std::swap(x[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(p)]);
      for (int i = j + 1; i <= std::min(n_ - 1, j + kl_); ++i) {
        x[static_cast<std::size_t>(i)] -= at_c(i, j) * x[static_cast<std::size_t>(j)];
      }
    }
    for (int j = n_ - 1; j >= 0; --j) {
      x[static_cast<std::size_t>(j)] /= at_c(j, j);
      for (int i = std::max(0, j - ku_ - kl_); i < j; ++i) {
        x[static_cast<std::size_t>(i)] -= at_c(i, j) * x[static_cast<std::size_t>(j)];
      }
    }
    return x;
  }

 private:
  double& at(int i, int j) { return ab_[static_cast<std::size_t>(kl_ + ku_ + i - j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
  double at_c(int i, int j) const { return ab_[static_cast<std::size_t>(kl_ + ku_ + i - j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

  void factor() {
    for (int j = 0; j < n_; ++j) {
      int imax = j;
      double vmax = std::abs(at(j, j));
      for (int i = j + 1; i <= std::min(n_ - 1, j + kl_); ++i) {
        if (std::abs(at(i, j)) > vmax) {
          vmax = std::abs(at(i, j));
          imax = i;
        }
      }
      ipiv_[static_cast<std::size_t>(j)] = imax;
      if (imax != j) {
        for (int c = j; c <= std::min(n_ - 1, j + kl_ + ku_); ++c) {
          std::swap(at(j, c), at(imax, c));
        }
      }
      double piv = at(j, j);
      if (std::abs(piv) < tiny_) {
        piv = (piv >= 0.0 ? tiny_ : -tiny_);
        at(j, j) = piv;
      }
      for (int i = j + 1; i <= std::min(n_ - 1, j + kl_); ++i) {
        double m = at(i, j) / piv;
        at(i, j) = m;
        for (int c = j + 1; c <= std::min(n_ - 1, j + kl_ + ku_); ++c) {
          at(i, c) -= m * at(j, c);
        }
      }
    }
  }

  int n_, kl_, ku_, ld_;
  double tiny_ = 0.0;
  std::vector<double> ab_;
  std::vector<int> ipiv_;
};

// ---------------------------------------------------------------------------
// Shifted solver for periodic banded matrices: bordered block elimination.
// The last b rows/columns (which carry the wraparound corners) form the
// border; the leading block is strictly banded.
// ---------------------------------------------------------------------------
class CyclicBandedSolver {
 public:
  CyclicBandedSolver(const BandedSym& a, double shift) : n_(a.dim()), b_(a.half_bandwidth()) {
    const int m = n_ - b_;
    BandedSym a11(m, b_, false);
    for (int r = 0; r <= b_; ++r) {
      for (int i = 0; i + r < m; ++i) a11.band(r, i) = a.at(i, i + r);
    }
    lu_ = std::make_unique<BandedLU>(a11, shift);
    a12_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(b_), 0.0);
    a21_.assign(static_cast<std::size_t>(b_) * static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
      for (int c = 0; c < b_; ++c) {
        double v = a.at(i, m + c);
        a12_[static_cast<std::size_t>(i) * b_ + c] = v;
        a21_[static_cast<std::size_t>(c) * m + i] = a.at(m + c, i);
      }
    }
    // Schur complement S = A22 - A21 A11^{-1} A12
    s_.assign(static_cast<std::size_t>(b_) * static_cast<std::size_t>(b_), 0.0);
    std::vector<std::vector<double>> y(static_cast<std::size_t>(b_));
    for (int c = 0; c < b_; ++c) {
      std::vector<double> col(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = a12_[static_cast<std::size_t>(i) * b_ + c];
      y[static_cast<std::size_t>(c)] = lu_->solve(col);
    }
    for (int r = 0; r < b_; ++r) {
      for (int c = 0; c < b_; ++c) {
        double acc = a.at(m + r, m + c) - (r == c ? shift : 0.0);
        for (int i = 0; i < m; ++i) acc -= a21_[static_cast<std::size_t>(r) * m + i] * y[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
        s_[static_cast<std::size_t>(r) * b_ + c] = acc;
      }
    }
    yb_ = std::move(y);
    factor_small();
  }

  std::vector<double> solve(std::span<const double> rhs) const {
    const int m = n_ - b_;
    std::vector<double> b1(rhs.begin(), rhs.begin() + m);
    std::vector<double> y1 = lu_->solve(b1);
    std::vector<double> r2(static_cast<std::size_t>(b_));
    for (int r = 0; r < b_; ++r) {
      double acc = rhs[static_cast<std::size_t>(m + r)];
      for (int i = 0; i < m; ++i) acc -= a21_[static_cast<std::size_t>(r) * m + i] * y1[static_cast<std::size_t>(i)];
      r2[static_cast<std::size_t>(r)] = acc;
    }
    std::vector<double> x2 = solve_small(r2);
    std::vector<double> x(static_cast<std::size_t>(n_));
    for (int i = 0; i < m; ++i) {
      double corr = 0.0;
      for (int c = 0; c < b_; ++c) corr += yb_[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] * x2[static_cast<std::size_t>(c)];
      x[static_cast<std::size_t>(i)] = y1[static_cast<std::size_t>(i)] - corr;
    }
    for (int c = 0; c < b_; ++c) x[static_cast<std::size_t>(m + c)] = x2[static_cast<std::size_t>(c)];
    return x;
  }

 private:
  void factor_small() {
    // dense LU with partial pivoting on the b x b Schur complement
    sp_.assign(static_cast<std::size_t>(b_), 0);
    for (int k = 0; k < b_; ++k) {
      int imax = k;
      for (int i = k + 1; i < b_; ++i) {
        if (std::abs(s_[static_cast<std::size_t>(i) * b_ + k]) > std::abs(s_[static_cast<std::size_t>(imax) * b_ + k])) imax = i;
      }
      sp_[static_cast<std::size_t>(k)] = imax;
      if (imax != k) {
        for (int c = 0; c < b_; ++c) std::swap(s_[static_cast<std::size_t>(k) * b_ + c], s_[static_cast<std::size_t>(imax) * b_ + c]);
      }
      double piv = s_[static_cast<std::size_t>(k) * b_ + k];
      if (piv == 0.0) {
        piv = kEps * kEps;
        s_[static_cast<std::size_t>(k) * b_ + k] = piv;
      }
      for (int i = k + 1; i < b_; ++i) {
        double mfac = s_[static_cast<std::size_t>(i) * b_ + k] / piv;
        s_[static_cast<std::size_t>(i) * b_ + k] = mfac;
        for (int c = k + 1; c < b_; ++c) s_[static_cast<std::size_t>(i) * b_ + c] -= mfac * s_[static_cast<std::size_t>(k) * b_ + c];
      }
    }
  }

  std::vector<double> solve_small(std::vector<double> r) const {
    for (int k = 0; k < b_; ++k) {
      int p = sp_[static_cast<std::size_t>(k)];
      if (p != k) std::swap(r[static_cast<std::size_t>(k)], r[static_cast<std::size_t>(p)]);
      for (int i = k + 1; i < b_; ++i) r[static_cast<std::size_t>(i)] -= s_[static_cast<std::size_t>(i) * b_ + k] * r[static_cast<std::size_t>(k)];
    }
    for (int k = b_ - 1; k >= 0; --k) {
      for (int c = k + 1; c < b_; ++c) r[static_cast<std::size_t>(k)] -= s_[static_cast<std::size_t>(k) * b_ + c] * r[static_cast<std::size_t>(c)];
      r[static_cast<std::size_t>(k)] /= s_[static_cast<std::size_t>(k) * b_ + k];
    }
    return r;
  }

  int n_, b_;
  std::unique_ptr<BandedLU> lu_;
  std::vector<double> a12_, a21_, s_;
  std::vector<std::vector<double>> yb_;
  std::vector<int> sp_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double nrm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void fix_sign(std::vector<double>& v) {
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  for (double x : v) {
    if (std::abs(x) > 1e-8 * vmax) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

EighResult eigh(const BandedSym& a, int n_eigs, const EighOptions& opts) {
  const int n = a.dim();
  if (n_eigs < 1 || n_eigs > n) throw std::invalid_argument("eigh: n_eigs out of range");

  std::vector<double> d, e;
  if (!a.periodic() && a.half_bandwidth() <= 1) {
    d.assign(static_cast<std::size_t>(n), 0.0);
    e.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a.band(0, i);
    if (a.half_bandwidth() == 1) {
      for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i)] = a.band(1, i - 1);
    }
  } else if (!a.periodic()) {
    banded_tridiag(a, d, e);
  } else {
    auto dense = a.to_dense();
    householder_tridiag(dense, d, e);
  }

  std::vector<double> off(static_cast<std::size_t>(n > 1 ? n - 1 : 0));
  for (int i = 1; i < n; ++i) off[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  EighResult res;
  int sweeps = 0;
  std::vector<double> all = tql_eigenvalues(std::move(d), std::move(off), opts.ql_max_iter, &sweeps);
  res.iterations = sweeps;
  res.values.assign(all.begin(), all.begin() + n_eigs);
  if (!opts.vectors) return res;

  const double norm_a = std::max(a.norm_inf(), kEps);
  const double cluster_radius = 1e3 * kEps * norm_a;
  const double sep_min = 10.0 * kEps * norm_a;
  const double resid_target = std::max(opts.tol, 1e4 * kEps) * norm_a;

  res.vectors.reserve(static_cast<std::size_t>(n_eigs));
  double prev_shift = -std::numeric_limits<double>::infinity();
  for (int idx = 0; idx < n_eigs; ++idx) {
    double lambda = res.values[static_cast<std::size_t>(idx)];
    double shift = lambda;
    if (shift - prev_shift < sep_min) shift = prev_shift + sep_min;
    prev_shift = shift;

    std::unique_ptr<BandedLU> lu;
    std::unique_ptr<CyclicBandedSolver> cyc;
    if (a.periodic()) {
      cyc = std::make_unique<CyclicBandedSolver>(a, shift);
    } else {
      lu = std::make_unique<BandedLU>(a, shift);
    }
    auto solve = [&](std::span<const double> rhs) {
      return a.periodic() ? cyc->solve(rhs) : lu->solve(rhs);
    };

    // members of the current quasi-degenerate cluster already computed
    std::vector<int> cluster;
    for (int j = 0; j < idx; ++j) {
      if (std::abs(res.values[static_cast<std::size_t>(j)] - lambda) <= cluster_radius) cluster.push_back(j);
    }

    bool accepted = false;
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int restart = 0; restart < opts.inv_restarts && !accepted; ++restart) {
      SplitMix64 rng(SplitMix64(0x1A705C0000ULL + static_cast<std::uint64_t>(idx)).derive(
          static_cast<std::uint64_t>(restart)));
      for (double& x : v) x = rng.uniform(-1.0, 1.0);
      double nv = nrm2(v);
      for (double& x : v) x /= nv;
      for (int it = 0; it < opts.inv_max_iter; ++it) {
        std::vector<double> w = solve(v);
        for (int j : cluster) {
          double c = dot(res.vectors[static_cast<std::size_t>(j)], w);
          for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= c * res.vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        double nw = nrm2(w);
        if (nw == 0.0) break;
        for (double& x : w) x /= nw;
        v = std::move(w);
        std::vector<double> av = a.matvec(v);
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
          double r = av[static_cast<std::size_t>(i)] - lambda * v[static_cast<std::size_t>(i)];
          resid += r * r;
        }
        resid = std::sqrt(resid);
        if (resid <= resid_target) {
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) {
      throw ConvergenceError(
          "eigh: inverse iteration failed for eigenvalue index " + std::to_string(idx),
          opts.inv_max_iter * opts.inv_restarts);
    }
    fix_sign(v);
    res.vectors.push_back(std::move(v));
  }
  return res;
}

}  // namespace latosc::num
