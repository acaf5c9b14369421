#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace latosc::cli {

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  const char* env = std::getenv("LATOSC_OUT");
  cfg.out_dir = (env && *env) ? env : ".";
  return cfg;
}

namespace {

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for '" + key + "': " + v);
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for '" + key + "': " + v);
  }
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "m") m = static_cast<int>(to_long(key, value));
  else if (key == "n_max") n_max = static_cast<int>(to_long(key, value));
  else if (key == "stencil_order") stencil_order = static_cast<int>(to_long(key, value));
  else if (key == "n_eigs") n_eigs = static_cast<int>(to_long(key, value));
  else if (key == "quad_points") quad_points = static_cast<int>(to_long(key, value));
  else if (key == "n_theta") n_theta = static_cast<int>(to_long(key, value));
  else if (key == "grid_g") grid_g = static_cast<int>(to_long(key, value));
  else if (key == "energy_points") energy_points = static_cast<int>(to_long(key, value));
  else if (key == "mc_samples") mc_samples = to_long(key, value);
  else if (key == "mc_chains") mc_chains = static_cast<int>(to_long(key, value));
  else if (key == "coeff_c") coeff_c = to_double(key, value);
  else if (key == "seed") seed = static_cast<std::uint64_t>(to_long(key, value));
  else if (key == "out_dir") out_dir = value;
  else if (key == "tol_ground") tol_ground = to_double(key, value);
  else if (key == "tol_gup") tol_gup = to_double(key, value);
  else if (key == "tol_coherent") tol_coherent = to_double(key, value);
  else if (key == "tol_angular") tol_angular = to_double(key, value);
  else if (key == "tol_hermite") tol_hermite = to_double(key, value);
  else if (key == "tol_manybody") tol_manybody = to_double(key, value);
  else if (key == "tol_scattering") tol_scattering = to_double(key, value);
  else throw ConfigError("config: unknown key '" + key + "'");
}

std::string RunConfig::echo() const {
  std::ostringstream os;
  os << "m=" << m << " n_max=" << n_max << " stencil_order=" << stencil_order
     << " n_eigs=" << n_eigs << " quad_points=" << quad_points << " n_theta=" << n_theta
     << " grid_g=" << grid_g << " energy_points=" << energy_points
     << " mc_samples=" << mc_samples << " mc_chains=" << mc_chains
     << " coeff_c=" << coeff_c << " seed=" << seed << " out_dir=" << out_dir;
  return os.str();
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    auto b = std::find_if(line.begin(), line.end(), notspace);
    auto e = std::find_if(line.rbegin(), line.rend(), notspace).base();
    if (b >= e) continue;
    std::string trimmed(b, e);
    auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: expected key = value at " + path + ":" +
                        std::to_string(lineno));
    }
    auto trim = [&](std::string s) {
      auto sb = std::find_if(s.begin(), s.end(), notspace);
      auto se = std::find_if(s.rbegin(), s.rend(), notspace).base();
      return (sb < se) ? std::string(sb, se) : std::string();
    };
    cfg.set(trim(trimmed.substr(0, eq)), trim(trimmed.substr(eq + 1)));
  }
}

}  // namespace latosc::cli
