#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace latosc::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  double measured;
  double tolerance;  // pass iff measured <= tolerance
  bool pass;
};

// Runs the closed-form invariant suite: ground-state annihilation and
// minimal uncertainty, coherent defining relations, 2D angular momentum and
// its commutator decay, the lattice Hermite residual, scattering closed
// forms, and the many-body annihilation/zero-energy checks.  `suite` is one
// of: all, ground, spectrum, coherent, angular, hermite, scattering,
// manybody.  Throws ConfigError for unknown suite names.
std::vector<CheckResult> run_verify(const std::string& suite, const RunConfig& cfg);

}  // namespace latosc::cli
