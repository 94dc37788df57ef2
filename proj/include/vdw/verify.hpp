#pragma once

// Self-check of the library: closed-form energy against the numerical
// Eberlein-Zietal route, Dirichlet boundary residuals of the Green's
// function and the symmetry properties of the model.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace vdw {

struct VerifyOptions {
  std::uint64_t seed = 20221122;
  std::size_t samples = 200;  // oracle-equivalence configurations
  std::size_t boundary_samples = 1000;  // per surface and radius
  std::size_t symmetry_trials = 10000;
  // Fault injection: G_H is scaled by (1 + perturb_green) on the checked
  // path. Zero in normal runs.
  double perturb_green = 0.0;
  double energy_tol = 1e-6;
  double boundary_tol = 1e-10;
  double symmetry_tol = 1e-12;
};

struct CheckResult {
  std::string name;
  std::size_t trials;
  double worst;  // largest observed deviation, in the check's own measure
  double tolerance;
  bool passed;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  double mean_energy_deviation = 0.0;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace vdw
