#pragma once

#include <iosfwd>

#include "fpspectral/banded.hpp"
#include "fpspectral/mesh.hpp"
#include "fpspectral/potential.hpp"

namespace fpspectral {

// Stiffness and mass matrices of the Schroedinger bilinear form
//   a(u, w) = int vartheta u' w' + Phi u w dv,   b(u, w) = int u w dv
// on [-R, R] after eliminating the two Dirichlet boundary unknowns.
struct DiscreteOperator {
  SymBand A;
  SymBand B;
  int semi_bandwidth = 0;
  int dim() const { return A.dim(); }
  // neighboring elements couple 2*degree + 1 node values
  int bandwidth() const { return 2 * semi_bandwidth + 1; }
};

// High-order finite element assembly on the given mesh, per-element
// Gauss-Legendre quadrature. Element contributions are accumulated in fixed
// element order. The assembled stiffness matrix is checked for symmetry
// (relative deviation below 1e-13) and averaged with its transpose.
DiscreteOperator assemble(const Mesh& mesh, const PotentialSpec& spec);

// Second-order central finite differences on a uniform grid with n_points
// grid points (endpoints included, Dirichlet). The mass matrix is h*I so
// that eigenvector normalization matches the finite element convention.
// n_points must be odd so a grid point lies at v = 0.
DiscreteOperator assemble_fd(double R, int n_points, const PotentialSpec& spec);

// Triplet dumps of A and B for external verification.
void dump_operator(const DiscreteOperator& op, std::ostream& a_stream, std::ostream& b_stream);

}  // namespace fpspectral
