#pragma once

#include <cstddef>
#include <vector>

#include "fpspectral/quadrature.hpp"

namespace fpspectral {

// Uniform 1D mesh of [-R, R] with Lagrange elements on Gauss-Lobatto nodes.
// The node set is exactly mirror-symmetric (nodes[i] == -nodes[N-1-i]) and an
// element boundary sits exactly at v = 0; the |v|^3 friction term has its
// kink there and no quadrature panel may straddle it.
struct Mesh {
  double R = 10.0;
  int n_elements = 1000;
  int degree = 10;      // polynomial degree p per element
  int quad_degree = 21; // polynomial exactness of the per-element rule

  std::vector<double> nodes;      // global nodes, size n_elements * degree + 1
  std::vector<double> ref_nodes;  // Gauss-Lobatto nodes on [-1, 1], size degree + 1
  std::vector<double> bary_w;     // barycentric weights of ref_nodes
  QuadRule quad;                  // Gauss-Legendre rule on [-1, 1]

  // basis_val[i][q], basis_der[i][q]: Lagrange basis i and its derivative at
  // quadrature point q of the reference element.
  std::vector<std::vector<double>> basis_val;
  std::vector<std::vector<double>> basis_der;

  int n_nodes() const { return n_elements * degree + 1; }
  int n_interior() const { return n_elements * degree - 1; }
  double element_width() const { return 2.0 * R / n_elements; }
  // Global index of the first node of element e; the element owns degree+1
  // consecutive nodes, sharing its endpoints with the neighbors.
  int first_node(int e) const { return e * degree; }
};

Mesh build_mesh(double R, int n_elements, int degree, int quad_degree);

// Lagrange basis values (and optionally derivatives) at local coordinate t in
// [-1, 1], stable barycentric form with an exact-hit branch at the nodes.
void lagrange_basis(const std::vector<double>& ref_nodes, const std::vector<double>& bary_w,
                    double t, std::vector<double>& values, std::vector<double>* derivs);

// Evaluates the finite element function with the given interior coefficients
// (homogeneous Dirichlet values at +-R) at an arbitrary point v in [-R, R].
double evaluate_fem(const Mesh& mesh, const std::vector<double>& interior_coeffs, double v);

// L2 norm of the finite element function, exact per-element quadrature.
double fem_l2_norm(const Mesh& mesh, const std::vector<double>& interior_coeffs);

}  // namespace fpspectral
