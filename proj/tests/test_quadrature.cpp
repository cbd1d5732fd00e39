#include <doctest.h>

#include <cmath>

#include "fpspectral/errors.hpp"
#include "fpspectral/quadrature.hpp"

using namespace fpspectral;

namespace {

// Exact monomial integrals over [-1, 1].
double monomial_integral(int k) { return k % 2 ? 0.0 : 2.0 / (k + 1); }

double apply(const QuadRule& rule, int k) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * std::pow(rule.points[i], k);
  return acc;
}

}  // namespace

TEST_CASE("gauss-legendre integrates monomials up to degree 2n-1") {
  for (int n : {1, 2, 5, 11, 16, 32}) {
    const QuadRule rule = gauss_legendre(n);
    REQUIRE(rule.size() == static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      CHECK(apply(rule, k) == doctest::Approx(monomial_integral(k)).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("gauss-legendre nodes are exactly mirror symmetric") {
  for (int n : {4, 7, 11, 32}) {
    const QuadRule rule = gauss_legendre(n);
    for (int i = 0; i < n; ++i) {
      CHECK(rule.points[i] == -rule.points[n - 1 - i]);
      CHECK(rule.weights[i] == rule.weights[n - 1 - i]);
    }
  }
}

TEST_CASE("gauss-lobatto includes endpoints and integrates degree 2n-3") {
  for (int n : {2, 3, 5, 11, 17}) {
    const QuadRule rule = gauss_lobatto(n);
    CHECK(rule.points.front() == -1.0);
    CHECK(rule.points.back() == 1.0);
    for (int i = 1; i < n; ++i) CHECK(rule.points[i] > rule.points[i - 1]);
    for (int k = 0; k <= 2 * n - 3; ++k) {
      CHECK(apply(rule, k) == doctest::Approx(monomial_integral(k)).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("composite gauss reproduces the gaussian integral") {
  const double value = integrate([](double v) { return std::exp(-0.5 * v * v); }, -10.0, 10.0, 200, 32);
  CHECK(value == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("rectangle rule: first order on generic integrands, spectral on decaying ones") {
  // exp on [0, 1] has boundary mismatch: plain O(h) convergence
  const double exact = std::exp(1.0) - 1.0;
  const double coarse = integrate_rectangle([](double v) { return std::exp(v); }, 0.0, 1.0, 100);
  const double fine = integrate_rectangle([](double v) { return std::exp(v); }, 0.0, 1.0, 10000);
  const double ratio = std::abs(coarse - exact) / std::abs(fine - exact);
  CHECK(ratio > 50.0);
  CHECK(ratio < 200.0);

  // a Gaussian on a symmetric interval: all boundary corrections vanish and
  // the rule is accurate to machine precision already at moderate h
  const double g = integrate_rectangle([](double v) { return std::exp(-v * v); }, -8.0, 8.0, 400);
  CHECK(g == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("quadrature parameter validation") {
  CHECK_THROWS_AS(gauss_legendre(0), BadParameter);
  CHECK_THROWS_AS(gauss_lobatto(1), BadParameter);
  CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 0.0, 1.0, 0, 4), BadParameter);
}
