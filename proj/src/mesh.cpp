#include "fpspectral/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "fpspectral/errors.hpp"

namespace fpspectral {

namespace {

std::vector<double> barycentric_weights(const std::vector<double>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) w[i] /= (nodes[i] - nodes[j]);
    }
  }
  return w;
}

}  // namespace

void lagrange_basis(const std::vector<double>& ref_nodes, const std::vector<double>& bary_w,
                    double t, std::vector<double>& values, std::vector<double>* derivs) {
  const std::size_t n = ref_nodes.size();
  values.assign(n, 0.0);
  if (derivs) derivs->assign(n, 0.0);

  // Exact hit: fall back to the nodal differentiation matrix row.
  for (std::size_t i = 0; i < n; ++i) {
    if (t == ref_nodes[i] || std::abs(t - ref_nodes[i]) < 1e-15) {
      values[i] = 1.0;
      if (derivs) {
        double diag = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          const double d = (bary_w[j] / bary_w[i]) / (ref_nodes[i] - ref_nodes[j]);
          (*derivs)[j] = d;
          diag -= d;
        }
        (*derivs)[i] = diag;
      }
      return;
    }
  }

  double s = 0.0, sp = 0.0;
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = bary_w[i] / (t - ref_nodes[i]);
    s += r[i];
    sp -= r[i] / (t - ref_nodes[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = r[i] / s;
    if (derivs) {
      (*derivs)[i] = values[i] * (-1.0 / (t - ref_nodes[i]) - sp / s);
    }
  }
}

Mesh build_mesh(double R, int n_elements, int degree, int quad_degree) {
  if (!(R > 0.0)) throw BadParameter("mesh: R must be positive");
  if (n_elements < 2) throw BadParameter("mesh: need at least two elements");
  if (n_elements % 2 != 0) {
    throw BadParameter("mesh: n_elements must be even so an element boundary lies at v = 0");
  }
  if (degree < 1) throw BadParameter("mesh: degree must be at least 1");
  if (quad_degree < 2 * degree + 1) {
    throw BadParameter("mesh: quad_degree must be at least 2*degree + 1");
  }

  Mesh mesh;
  mesh.R = R;
  mesh.n_elements = n_elements;
  mesh.degree = degree;
  mesh.quad_degree = quad_degree;
  mesh.ref_nodes = gauss_lobatto(degree + 1).points;
  mesh.bary_w = barycentric_weights(mesh.ref_nodes);
  mesh.quad = gauss_for_exactness(quad_degree);

  // Element boundaries R*(2e-n)/n and interior Lobatto nodes, built so the
  // global node set mirrors exactly and node n_elements*degree/2 is 0.
  mesh.nodes.assign(mesh.n_nodes(), 0.0);
  for (int e = 0; e < n_elements; ++e) {
    const double left = R * static_cast<double>(2 * e - n_elements) / n_elements;
    const double right = R * static_cast<double>(2 * (e + 1) - n_elements) / n_elements;
    const double mid = 0.5 * (left + right);
    const double half = 0.5 * (right - left);
    for (int i = 0; i <= degree; ++i) {
      double v = mid + half * mesh.ref_nodes[i];
      if (i == 0) v = left;
      if (i == degree) v = right;
      mesh.nodes[mesh.first_node(e) + i] = v;
    }
  }

  const std::size_t nq = mesh.quad.size();
  mesh.basis_val.assign(degree + 1, std::vector<double>(nq, 0.0));
  mesh.basis_der.assign(degree + 1, std::vector<double>(nq, 0.0));
  std::vector<double> vals, ders;
  for (std::size_t q = 0; q < nq; ++q) {
    lagrange_basis(mesh.ref_nodes, mesh.bary_w, mesh.quad.points[q], vals, &ders);
    for (int i = 0; i <= degree; ++i) {
      mesh.basis_val[i][q] = vals[i];
      mesh.basis_der[i][q] = ders[i];
    }
  }
  return mesh;
}

double fem_l2_norm(const Mesh& mesh, const std::vector<double>& interior_coeffs) {
  if (static_cast<int>(interior_coeffs.size()) != mesh.n_interior()) {
    throw MeshMismatch("fem_l2_norm: coefficient count does not match the mesh");
  }
  const int p = mesh.degree;
  const int last = mesh.n_nodes() - 1;
  const std::size_t nq = mesh.quad.size();
  const double half = 0.5 * mesh.element_width();
  double acc = 0.0;
  for (int e = 0; e < mesh.n_elements; ++e) {
    const int base = mesh.first_node(e);
    for (std::size_t q = 0; q < nq; ++q) {
      double f = 0.0;
      for (int i = 0; i <= p; ++i) {
        const int g = base + i;
        if (g == 0 || g == last) continue;
        f += interior_coeffs[g - 1] * mesh.basis_val[i][q];
      }
      acc += mesh.quad.weights[q] * f * f;
    }
  }
  return std::sqrt(acc * half);
}

double evaluate_fem(const Mesh& mesh, const std::vector<double>& interior_coeffs, double v) {
  if (static_cast<int>(interior_coeffs.size()) != mesh.n_interior()) {
    throw MeshMismatch("evaluate_fem: coefficient count does not match the mesh");
  }
  if (v < -mesh.R || v > mesh.R) return 0.0;
  const double width = mesh.element_width();
  int e = static_cast<int>(std::floor((v + mesh.R) / width));
  e = std::clamp(e, 0, mesh.n_elements - 1);
  const double left = mesh.R * static_cast<double>(2 * e - mesh.n_elements) / mesh.n_elements;
  const double t = std::clamp(2.0 * (v - left) / width - 1.0, -1.0, 1.0);
  std::vector<double> vals;
  lagrange_basis(mesh.ref_nodes, mesh.bary_w, t, vals, nullptr);
  double acc = 0.0;
  for (int i = 0; i <= mesh.degree; ++i) {
    const int g = mesh.first_node(e) + i;  // global node, 0 and last are Dirichlet
    if (g == 0 || g == mesh.n_nodes() - 1) continue;
    acc += interior_coeffs[g - 1] * vals[i];
  }
  return acc;
}

}  // namespace fpspectral
