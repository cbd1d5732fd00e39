#pragma once

#include <vector>

#include "fpspectral/eigensolve.hpp"
#include "fpspectral/mesh.hpp"
#include "fpspectral/potential.hpp"

namespace fpspectral {

enum class FourierRule {
  composite_rectangle,  // left-endpoint weights on the global node set
  per_element_gauss,    // the mesh's Gauss rule against the exact FEM polynomial
};

// Right-hand side samples at every global mesh node (boundary included).
std::vector<double> rhs_samples(const PotentialSpec& spec, const Mesh& mesh, RhsKind kind);

// Projections of one right-hand side onto the retained eigenfunctions,
// ordered like dec.retained_indices(). Requires the zero mode to be
// identified. zero_mode_projection receives the (near-vanishing) projection
// onto the kernel direction when non-null; for chi it doubles as a check of
// the solvability condition.
std::vector<double> project_rhs(const SpectralDecomposition& dec, const PotentialSpec& spec,
                                const Mesh& mesh, RhsKind kind, FourierRule rule,
                                double* zero_mode_projection = nullptr);

// eta_n and omega_n for n = 1..N over the retained modes.
struct FourierCoefficients {
  std::vector<double> eta;    // projections of -(v - V) sqrt(M)
  std::vector<double> omega;  // projections of -(1/vartheta) W' sqrt(M)
  FourierRule rule = FourierRule::composite_rectangle;
  double eta_zero_mode = 0.0;
  double omega_zero_mode = 0.0;
  int size() const { return static_cast<int>(eta.size()); }
};

FourierCoefficients fourier_coefficients(const SpectralDecomposition& dec, const PotentialSpec& spec,
                                         const Mesh& mesh, FourierRule rule);

// Partial sums D^n = sum_{k<=n} eta_k^2 / lambda_k and
// K^n = sum_{k<=n} eta_k omega_k / lambda_k over the retained modes, the
// kernel direction excluded by index.
struct CoefficientSeries {
  std::vector<double> lambda;  // retained eigenvalues, ascending
  std::vector<double> eta;
  std::vector<double> omega;
  std::vector<double> D_partial;
  std::vector<double> K_partial;
  int N_auto = 0;  // filled by auto_truncate

  int size() const { return static_cast<int>(D_partial.size()); }
  double D(int n) const { return D_partial[n - 1]; }
  double K(int n) const { return K_partial[n - 1]; }
};

// Forms the running sums for n = 1..N. Throws DivisionHazard if a retained
// eigenvalue lies within the zero tolerance of the decomposition.
CoefficientSeries truncated_coefficients(const SpectralDecomposition& dec,
                                         const std::vector<double>& eta,
                                         const std::vector<double>& omega, int N);

// Smallest N whose last three increments of both partial sums stay below
// rel_tol times the current sum (with a 1e-300 floor). Stores the result in
// series.N_auto as well. Throws NoConvergence if no N qualifies.
int auto_truncate(CoefficientSeries& series, double rel_tol);

}  // namespace fpspectral
