#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace fpspectral {

// Quadrature rule on the reference interval [-1, 1]. Nodes are strictly
// increasing and exactly mirror-symmetric: points[n-1-i] == -points[i].
struct QuadRule {
  std::vector<double> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
};

// n-point Gauss-Legendre rule, exact for polynomials of degree 2n-1.
QuadRule gauss_legendre(int n);

// n-point Gauss-Lobatto-Legendre rule (n >= 2), includes both endpoints,
// exact for polynomials of degree 2n-3.
QuadRule gauss_lobatto(int n);

// Smallest Gauss-Legendre rule with polynomial exactness >= degree.
QuadRule gauss_for_exactness(int degree);

// Composite Gauss-Legendre integration of f over [a, b] with `panels` equal
// panels of an n-point rule. Panel boundaries include the midpoint of [a, b]
// whenever `panels` is even.
double integrate(const std::function<double(double)>& f, double a, double b, int panels, int points);

// Composite left-endpoint rectangle rule on a uniform grid with `intervals`
// subintervals.
double integrate_rectangle(const std::function<double(double)>& f, double a, double b, int intervals);

}  // namespace fpspectral
