#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "latosc/numerics/banded.hpp"

namespace latosc::num {

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int iterations)
      : std::runtime_error(what), iterations(iterations) {}
  int iterations;
};

struct EighOptions {
  double tol = 1e-12;     // deflation / residual scale, relative to ||A||
  bool vectors = false;
  int ql_max_iter = 50;   // implicit-shift sweeps per eigenvalue
  int inv_max_iter = 8;   // inverse-iteration steps per start vector
  int inv_restarts = 3;   // fresh start vectors before giving up
};

struct EighResult {
  std::vector<double> values;                // ascending, n_eigs of them
  std::vector<std::vector<double>> vectors;  // unit vectors, matching order; empty unless requested
  int iterations = 0;                        // total QL sweeps
};

// Lowest n_eigs eigenpairs of a real symmetric banded matrix.
//
// Pipeline: band -> tridiagonal (Givens bulge-chasing for hard-wall
// matrices, dense Householder for periodic ones, whose wraparound corners
// leave the banded pattern), implicit-shift QL for all eigenvalues, then
// inverse iteration on the original matrix for the requested vectors with
// re-orthogonalization inside numerically degenerate clusters.
//
// Deterministic: fixed start vectors, ascending order, sign fixed so the
// first component of magnitude > 1e-8 * max is positive.
EighResult eigh(const BandedSym& a, int n_eigs, const EighOptions& opts = {});

// Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL.
// diag has size n, off has size n-1 (coupling i <-> i+1).  Ascending.
std::vector<double> tql_eigenvalues(std::vector<double> diag, std::vector<double> off,
                                    int max_iter = 50, int* sweeps = nullptr);

}  // namespace latosc::num
