#pragma once

#include <vector>

#include "fpspectral/potential.hpp"

namespace fpspectral {

// Reference drift coefficient from the closed-form 1D solution of the kappa
// cell problem,
//   K* = (1/vartheta) int (V - v)^2 M(v) dv,
// evaluated by nested composite Gauss-Legendre quadrature. Entirely
// independent of the spectral pipeline: it shares only the PotentialSpec.
struct OracleResult {
  double K_star = 0.0;
  double quad_error_estimate = 0.0;  // |coarse - fine| of the nested rules
  double K_star_rect = 0.0;          // same integral by a uniform rectangle rule
};

OracleResult drift_oracle(const PotentialSpec& spec, int quad_points = 32, int quad_panels = 200);

// Closed-form answers for the quadratic reference W = v^2/2:
// D = vartheta, K = 1, and the Schroedinger operator's spectrum 0, 1, 2, ...
struct QuadraticReference {
  double D_exact = 0.0;
  double K_exact = 1.0;
  std::vector<double> lambda_exact;
};

QuadraticReference quadratic_reference(double vartheta, int n_eigenvalues = 8);

}  // namespace fpspectral
