#pragma once

#include <optional>
#include <vector>

#include "fpspectral/mesh.hpp"
#include "fpspectral/operators.hpp"
#include "fpspectral/potential.hpp"

namespace fpspectral {

// Lowest eigenpairs of the generalized pencil A x = lambda B x. Eigenvalues
// are ascending, eigenvectors B-orthonormal with a deterministic sign: the
// entry of largest index among those exceeding 1e-8 of the vector's maximum
// is made nonnegative (for confined states this pins the sign on the decaying
// right tail, where eigenfunctions have settled to a fixed sign).
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residuals;  // ||A x - lambda B x|| / ||B x|| per pair

  std::optional<int> zero_mode;  // set by identify_zero_mode
  double gap = 0.0;              // lambda(first retained) - lambda(zero mode)
  double tol_zero = 0.0;         // threshold used when the zero mode was identified

  int count() const { return static_cast<int>(eigenvalues.size()); }
  // Eigen-indices excluding the zero mode, ascending; requires zero_mode.
  std::vector<int> retained_indices() const;
};

enum class EigSolver {
  automatic,  // Lanczos for large pencils, dense for small ones
  dense,      // full dense solve (dimension <= 2000)
  lanczos,    // shift-invert Lanczos with full reorthogonalization
};

// Computes the `count` algebraically smallest eigenpairs. The Lanczos path
// factors A + tol*B once (shift -tol sits just below the spectrum of the
// positive operator) and iterates on its inverse in the B-inner product with
// full reorthogonalization; the dense path is an Eigen solve on the
// densified pencil and doubles as the fallback when Lanczos does not
// converge and the pencil is small enough.
SpectralDecomposition lowest_eigenpairs(const DiscreteOperator& op, int count, double tol = 1e-6,
                                        EigSolver solver = EigSolver::automatic);

struct ZeroModeInfo {
  int index = 0;
  double gap = 0.0;
};

// Locates the kernel direction: the eigenvalue of smallest magnitude must lie
// within tol_zero of 0 and every other eigenvalue must be at least
// 10*tol_zero. Throws TunnellingCollapse otherwise; this is the regime where
// the gap above the kernel is numerically indistinguishable from zero and
// coefficient sums must not be formed.
ZeroModeInfo identify_zero_mode(SpectralDecomposition& dec, double tol_zero = 1e-8);

struct AsymmetryScore {
  double score = 0.0;
  bool broken = false;
};

// Parity defect of the first two eigenfunctions of a symmetric potential:
//   s = min over parity of ||Psi(v) -+ Psi(-v)||_L2 / ||Psi||_L2,
// evaluated through the mass matrix using the mesh's exact node mirror map.
// A broken score flags the computation as untrustworthy.
std::vector<AsymmetryScore> symmetry_diagnostic(const SpectralDecomposition& dec, const Mesh& mesh,
                                                const PotentialSpec& spec, double s_tol = 1e-4);

}  // namespace fpspectral
