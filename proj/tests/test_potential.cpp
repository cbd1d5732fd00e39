#include <doctest.h>

#include <cmath>

#include "fpspectral/errors.hpp"
#include "fpspectral/potential.hpp"

using namespace fpspectral;

namespace {

// Independent integration oracle: plain composite trapezoid on a fine uniform
// grid, nothing shared with the Gauss panels used inside the library.
double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) acc += f(a + i * h);
  return acc * h;
}

}  // namespace

TEST_CASE("potential and derivatives of the symmetric smooth case") {
  const PotentialSpec spec = make_potential(1.0, 1.0, 0.0, false);
  const WDerivs at0 = eval_W(spec, 0.0);
  CHECK(at0.W == 0.0);
  CHECK(at0.dW == 0.0);
  CHECK(at0.d2W == -1.0);

  // well bottom of the symmetric quartic: W'' = 3v^2 - 1 gives 2 at v = 1
  const WDerivs at1 = eval_W(spec, 1.0);
  CHECK(at1.W == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(at1.dW == 0.0);
  CHECK(at1.d2W == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("potential and derivatives of the singular |v|^3 case") {
  // W = v^4/4 - |v|^3/3 at gamma = 1; hand-differentiated at v = -2:
  // W = 4 - 8/3 = 4/3, W' = v^3 - v|v| = -8 + 4 = -4, W'' = 3v^2 - 2|v| = 8.
  const PotentialSpec spec = make_potential(1.0, 1.0, 0.0, true);
  const WDerivs w = eval_W(spec, -2.0);
  CHECK(w.W == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(w.dW == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(w.d2W == doctest::Approx(8.0).epsilon(1e-15));
  // second derivative is continuous at the kink
  CHECK(eval_W(spec, 0.0).d2W == 0.0);
  CHECK(eval_W(spec, 1e-12).d2W == doctest::Approx(0.0).scale(1.0).epsilon(1e-11));
}

TEST_CASE("schrodinger potential values and confinement") {
  const PotentialSpec quad = make_quadratic_reference(1.0);
  CHECK(schrodinger_potential(quad, 0.0) == doctest::Approx(-0.5).epsilon(1e-15));

  const PotentialSpec a = make_potential(1.0, 1.0, 0.0, false);
  // W'' (1) = 2 and W'(1) = 0, so Phi(1) = -1
  CHECK(schrodinger_potential(a, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(schrodinger_potential(a, a.domain_R) > schrodinger_potential(a, 0.0));
  CHECK(schrodinger_potential(a, a.domain_R) > schrodinger_potential(a, 1.0));

  const PotentialSpec b = make_potential(5.0, 1.0, 0.0, true);
  const PotentialSpec c = make_potential(1.0, 1.0, 10.0, false);
  for (const PotentialSpec& spec : {a, b, c}) {
    double interior_min = 1e300;
    for (double v = -spec.domain_R + 0.5; v <= spec.domain_R - 0.5; v += 0.01) {
      interior_min = std::min(interior_min, schrodinger_potential(spec, v));
    }
    CHECK(schrodinger_potential(spec, spec.domain_R) > interior_min);
    CHECK(schrodinger_potential(spec, -spec.domain_R) > interior_min);
  }
}

TEST_CASE("parity of symmetric potentials is exact") {
  for (bool sigma : {false, true}) {
    const PotentialSpec spec = make_potential(3.0, 1.0, 0.0, sigma);
    for (double v = 0.125; v < 10.0; v += 0.375) {
      const WDerivs plus = eval_W(spec, v), minus = eval_W(spec, -v);
      CHECK(plus.W == minus.W);
      CHECK(plus.dW == -minus.dW);
      CHECK(plus.d2W == minus.d2W);
      CHECK(schrodinger_potential(spec, v) == schrodinger_potential(spec, -v));
      CHECK(maxwellian_sqrt(spec, v) == maxwellian_sqrt(spec, -v));
    }
  }
}

TEST_CASE("maxwellian is normalized: independent trapezoid check") {
  for (const PotentialSpec& spec :
       {make_potential(1.0, 1.0, 0.0, false), make_potential(5.0, 1.0, 0.0, true),
        make_potential(1.0, 1.0, 5.0, false), make_quadratic_reference(0.5)}) {
    const double mass =
        trapezoid([&](double v) { return maxwellian(spec, v); }, -spec.domain_R, spec.domain_R, 400000);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
    const double mass_sqrt = trapezoid([&](double v) { return maxwellian_sqrt(spec, v) * maxwellian_sqrt(spec, v); },
                                       -spec.domain_R, spec.domain_R, 400000);
    CHECK(mass_sqrt == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("mean velocity: zero for symmetric, positive and accurate for tilted") {
  const PotentialSpec sym = make_potential(1.0, 1.0, 0.0, false);
  CHECK(sym.V == 0.0);

  const PotentialSpec tilted = make_potential(1.0, 1.0, 1.0, false);
  const double v_oracle = trapezoid([&](double v) { return v * maxwellian(tilted, v); },
                                    -tilted.domain_R, tilted.domain_R, 2000000);
  CHECK(tilted.V > 0.0);
  CHECK(tilted.V == doctest::Approx(v_oracle).epsilon(1e-10));
}

TEST_CASE("shifted solvability condition holds for every case") {
  for (double delta : {0.0, 1.0, 5.0, 10.0}) {
    const PotentialSpec spec = make_potential(1.0, 1.0, delta, false);
    const double compat = trapezoid([&](double v) { return (v - spec.V) * maxwellian(spec, v); },
                                    -spec.domain_R, spec.domain_R, 1000000);
    CHECK(std::abs(compat) < 1e-10);
  }
}

TEST_CASE("gaussian second moment of the quadratic reference") {
  for (double vartheta : {0.5, 1.0, 2.0}) {
    const PotentialSpec spec = make_quadratic_reference(vartheta);
    const double m2 = trapezoid([&](double v) { return v * v * maxwellian(spec, v); },
                                -spec.domain_R, spec.domain_R, 400000);
    CHECK(m2 == doctest::Approx(vartheta).epsilon(1e-9));
  }
}

TEST_CASE("rhs definitions") {
  const PotentialSpec quad = make_quadratic_reference(1.0);
  for (double v = -9.5; v < 10.0; v += 0.73) {
    // W' = v makes the two right-hand sides coincide at vartheta = 1
    CHECK(rhs_eval(quad, RhsKind::chi, v) == rhs_eval(quad, RhsKind::kappa, v));
  }
  const PotentialSpec sym = make_potential(1.0, 1.0, 0.0, false);
  CHECK(rhs_eval(sym, RhsKind::chi, 0.0) == 0.0);
  for (double v = 0.25; v < 10.0; v += 0.5) {
    CHECK(rhs_eval(sym, RhsKind::chi, v) == -rhs_eval(sym, RhsKind::chi, -v));
    CHECK(rhs_eval(sym, RhsKind::kappa, v) == -rhs_eval(sym, RhsKind::kappa, -v));
  }
}

TEST_CASE("parameter validation and failure modes") {
  CHECK_THROWS_AS(make_potential(0.0, 1.0, 0.0, false), BadParameter);
  CHECK_THROWS_AS(make_potential(1.0, -1.0, 0.0, false), BadParameter);
  CHECK_THROWS_AS(make_potential(1.0, 1.0, -0.5, false), BadParameter);
  CHECK_THROWS_AS(make_quadratic_reference(0.0), BadParameter);
  // domain too small: the equilibrium tails would touch the boundary
  CHECK_THROWS_AS(make_quadratic_reference(4.0, 10.0), BadParameter);
  CHECK_THROWS_AS(make_potential(1.0, 1.0, 0.0, false, 2.0), BadParameter);
  // a huge tilt concentrates all mass in a sliver at the boundary
  CHECK_THROWS_AS(make_potential(1.0, 1e-4, 1e6, false), NonNormalizable);
  // a vanishing temperature concentrates all mass between quadrature nodes
  CHECK_THROWS_AS(make_potential(1.0, 1e-300, 0.0, false), NonNormalizable);
  // the singular well sits at |v| = sqrt(gamma), outside the box for large gamma
  CHECK_THROWS_AS(make_potential(200.0, 1.0, 0.0, true), BadParameter);
}

TEST_CASE("deep singular wells normalize without overflow") {
  // well depth -gamma^2/12 at vartheta = 1/gamma: without the minimum shift
  // the equilibrium weight exp(75 * 30) would overflow
  const PotentialSpec spec = make_potential(30.0, 1.0, 0.0, true);
  CHECK(spec.Z > 0.0);
  CHECK(std::isfinite(spec.Z));
  CHECK(spec.W_min == doctest::Approx(-75.0).epsilon(1e-12));
  const double peak = maxwellian(spec, std::sqrt(30.0));
  CHECK(std::isfinite(peak));
  CHECK(peak > 1.0);  // sharply concentrated equilibrium
}
