#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpspectral/coefficients.hpp"
#include "fpspectral/eigensolve.hpp"
#include "fpspectral/potential.hpp"

namespace fpspectral {

// Everything a run needs; every field has a working default, so a config
// that only names a case is valid.
struct RunConfig {
  enum class Case { A, B, C, custom, quadratic };

  Case case_name = Case::A;
  double gamma = 1.0;
  double theta = 1.0;
  double delta = 1.0;      // only used by case C / custom
  int sigma = 0;           // only used by custom
  double vartheta = 1.0;   // only used by the quadratic reference

  // mesh (defaults match the production discretization: 1000 P10 elements
  // on [-10, 10] with a quadrature of exactness degree 21)
  double R = 10.0;
  int n_elements = 1000;
  int degree = 10;
  int quad_degree = 21;

  // modes
  int N_max = 50;
  double rel_tol = 1e-8;

  // tolerances
  double tol_zero = 1e-8;
  double s_tol = 1e-4;
  double solver_tol = 1e-3;
  double oracle_tol = 1e-4;  // threshold for the drift_ok report flag

  FourierRule fourier_rule = FourierRule::composite_rectangle;
  EigSolver solver = EigSolver::automatic;

  // Maxwellian normalization quadrature
  int quad_points = 32;
  int quad_panels = 200;

  // sweep
  std::string sweep_param;            // "", "gamma", "delta" or "theta"
  std::vector<double> sweep_values;

  // outputs
  std::string output_dir = "out";
  std::vector<std::string> formats = {"csv"};
  bool dump_eigenfunctions = false;
  bool dump_operators = false;

  bool has_sweep() const { return !sweep_param.empty(); }
};

RunConfig::Case parse_case(const std::string& name);
std::string case_to_string(RunConfig::Case c);
FourierRule parse_fourier_rule(const std::string& name);
EigSolver parse_solver(const std::string& name);

// Loads a flat "key = value" document (# starts a comment) over the given
// defaults. Unknown keys are rejected.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

// Validates cross-field constraints (case vs parameters, sweep shape,
// formats) and throws BadParameter with a precise message.
void validate_config(const RunConfig& config);

// Builds the potential for this config, with an optional sweep override
// applied to the swept parameter.
PotentialSpec potential_from_config(const RunConfig& config, std::optional<double> sweep_value = {});

}  // namespace fpspectral
