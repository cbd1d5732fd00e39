#include "fpspectral/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "fpspectral/errors.hpp"

namespace fpspectral {

namespace {

// Legendre polynomial P_n and its first derivative at x.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadRule gauss_legendre(int n) {
  if (n < 1) throw BadParameter("gauss_legendre: need at least one point");
  QuadRule rule;
  rule.points.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    // Seed in (-1, 0), then Newton on P_n.
    double x = -std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    legendre(n, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = x;
    rule.points[n - 1 - i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    double p = 0.0, dp = 1.0;
    legendre(n, 0.0, p, dp);
    rule.points[half] = 0.0;
    rule.weights[half] = 2.0 / (dp * dp);
  }
  return rule;
}

QuadRule gauss_lobatto(int n) {
  if (n < 2) throw BadParameter("gauss_lobatto: need at least two points");
  const int m = n - 1;  // interior points are roots of P_m'
  QuadRule rule;
  rule.points.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  rule.points[0] = -1.0;
  rule.points[n - 1] = 1.0;
  const double wend = 2.0 / (static_cast<double>(m) * (m + 1));
  rule.weights[0] = wend;
  rule.weights[n - 1] = wend;
  const int half = n / 2;
  for (int i = 1; i < half; ++i) {
    // Chebyshev-Lobatto seed, Newton on P_m' using the Legendre ODE for P_m''.
    double x = -std::cos(M_PI * i / m);
    double p = 0.0, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre(m, x, p, dp);
      const double d2p = (2.0 * x * dp - m * (m + 1.0) * p) / (1.0 - x * x);
      const double step = dp / d2p;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    legendre(m, x, p, dp);
    const double w = 2.0 / (static_cast<double>(m) * (m + 1) * p * p);
    rule.points[i] = x;
    rule.points[n - 1 - i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    double p = 0.0, dp = 0.0;
    legendre(m, 0.0, p, dp);
    rule.points[half] = 0.0;
    rule.weights[half] = 2.0 / (static_cast<double>(m) * (m + 1) * p * p);
  }
  return rule;
}

QuadRule gauss_for_exactness(int degree) {
  if (degree < 0) throw BadParameter("gauss_for_exactness: negative degree");
  return gauss_legendre(degree / 2 + 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels, int points) {
  if (panels < 1 || points < 1) throw BadParameter("integrate: need at least one panel and one point");
  const QuadRule rule = gauss_legendre(points);
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * width;
    const double half = 0.5 * width;
    const double mid = left + half;
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      acc += rule.weights[q] * f(mid + half * rule.points[q]);
    }
    total += acc * half;
  }
  return total;
}

double integrate_rectangle(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals < 1) throw BadParameter("integrate_rectangle: need at least one interval");
  const double h = (b - a) / intervals;
  double total = 0.0;
  for (int i = 0; i < intervals; ++i) {
    total += f(a + i * h);
  }
  return total * h;
}

}  // namespace fpspectral
