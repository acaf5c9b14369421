#include "latosc/coherent.hpp"

#include <cmath>
#include <stdexcept>

namespace latosc::osc {

WaveK displacement_apply(cplx alpha, const WaveK& psi) {
  const int m = psi.grid.size();
  const double d = psi.grid.spacing();
  std::vector<cplx> out(psi.values);
  const cplx factor = cplx(0.0, -1.0) * std::sqrt(2.0) * alpha;
  for (int j = 0; j < m; ++j) {
    double pj = std::sin(psi.grid.point(j) * d) / d;
    out[static_cast<std::size_t>(j)] *= std::exp(factor * pj);
  }
  return WaveK(psi.grid, std::move(out));
}

CoherentState coherent_state(const CoherentSpec& spec, const KGrid& grid) {
  const double gamma = 1.0 / (grid.spacing() * grid.spacing());
  WaveK psi0 = ground_state_analytic(grid, gamma);

  WaveK psi = WaveK::zeros(grid);
  switch (spec.kind) {
    case CoherentKind::eigenstate_form: {
      // PBC restriction: alpha = j/2, j integer, real
      double twice = 2.0 * spec.alpha.real();
      if (spec.alpha.imag() != 0.0 || std::abs(twice - std::round(twice)) > 1e-12) {
        throw std::invalid_argument(
            "coherent_state: eigenstate-form states exist only for alpha = j/2 "
            "(j integer); other amplitudes break the periodic boundary "
            "condition in k");
      }
      const cplx factor = cplx(0.0, -1.0) * std::sqrt(2.0) * spec.alpha;
      for (int j = 0; j < grid.size(); ++j) {
        psi.values[static_cast<std::size_t>(j)] =
            std::exp(factor * grid.point(j)) * psi0.values[static_cast<std::size_t>(j)];
      }
      break;
    }
    case CoherentKind::defined_form:
    case CoherentKind::displacement_generated:
      psi = displacement_apply(spec.alpha, psi0);
      break;
  }

  CoherentState out{std::move(psi), 0.0, false};
  out.norm = norm(out.psi);
  if (spec.alpha.imag() == 0.0) {
    for (auto& z : out.psi.values) z /= out.norm;
    out.normalized = true;
  }
  return out;
}

}  // namespace latosc::osc
