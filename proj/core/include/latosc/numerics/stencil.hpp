#pragma once

#include <complex>
#include <span>
#include <vector>

namespace latosc::num {

// Central finite differences on a uniform grid.  deriv in {1, 2}, order in
// {2, 4}.  Periodic grids wrap; otherwise one-sided stencils of the same
// order are used at the edges.
std::vector<double> central_diff(std::span<const double> f, int deriv, int order,
                                 double spacing, bool periodic);
std::vector<std::complex<double>> central_diff(std::span<const std::complex<double>> f,
                                               int deriv, int order, double spacing,
                                               bool periodic);

}  // namespace latosc::num
