#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latosc::cli {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tool-wide configuration.  Every key has the default shown here; a config
// file (plain `key = value` lines, '#' comments) can override any of them,
// and unknown keys are rejected.  Command-line flags override the file.
struct RunConfig {
  // resolutions
  int m = 2048;             // quasi-momentum grid points
  int n_max = -1;           // site half-width; -1 = auto from spacing
  int stencil_order = 4;    // k-space Laplacian stencil, 2 or 4
  int n_eigs = 12;
  int quad_points = 4096;   // scattering quadrature panels
  int n_theta = 512;        // scattering sweep grid
  int grid_g = 64;          // pair-correlation mesh
  int energy_points = 24;   // many-body energy quadrature per axis
  long mc_samples = 40000;  // sweeps per chain
  int mc_chains = 32;
  double coeff_c = 1.0;     // many-body exponent coefficient
  std::uint64_t seed = 42;
  std::string out_dir;      // default: $LATOSC_OUT or "."

  // verify-suite tolerances
  double tol_ground = 1e-10;
  double tol_gup = 1e-8;
  double tol_coherent = 1e-8;
  double tol_angular = 1e-8;
  double tol_hermite = 1e-4;
  double tol_manybody = 1e-8;
  double tol_scattering = 1e-9;

  static RunConfig defaults();
  void set(const std::string& key, const std::string& value);  // throws ConfigError
  std::string echo() const;  // canonical "k=v k=v ..." line for output headers
};

// Parse a config file into `cfg`.  Throws ConfigError on unknown keys or
// malformed lines.
void load_config_file(const std::string& path, RunConfig& cfg);

}  // namespace latosc::cli
