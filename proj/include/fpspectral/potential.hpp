#pragma once

#include <string>

#include "fpspectral/quadrature.hpp"

namespace fpspectral {

// Velocity potential together with everything derived from it: the effective
// diffusivity vartheta, the Maxwellian normalization Z and the equilibrium
// mean velocity V. Immutable after construction; cheap to copy and safe to
// share across threads.
//
// The quartic family, after rescaling v -> sqrt(gamma) v, is
//   W(v) = v^4/4 - sigma*sqrt(gamma)/3 |v|^3 - (1-sigma)/2 v^2 - delta/sqrt(gamma) v,
// with vartheta = theta/gamma. The quadratic reference W(v) = v^2/2 is kept as
// a separate family: it is the one case with a closed-form answer and serves
// as the known-answer configuration throughout the tests.
struct PotentialSpec {
  enum class Family { quartic, quadratic_reference };

  Family family = Family::quartic;
  double gamma = 1.0;
  double theta = 1.0;
  double delta = 0.0;
  bool sigma = false;      // true selects the |v|^3 friction term
  double vartheta = 1.0;   // theta / gamma
  double domain_R = 10.0;  // truncated domain is [-R, R]
  double W_min = 0.0;      // min of W on [-R, R]; exponentials are taken
                           // relative to it so deep wells cannot overflow
  double Z = 0.0;          // normalization of exp(-(W - W_min)/vartheta) on [-R, R]
  double V = 0.0;          // mean velocity of the Maxwellian; exactly 0 when delta == 0
  int quad_points = 32;    // Gauss points per panel used for Z and V
  int quad_panels = 200;   // panels on [-R, R] used for Z and V

  bool symmetric() const { return delta == 0.0; }
  std::string describe() const;
};

struct WDerivs {
  double W;
  double dW;
  double d2W;
};

// Builds the rescaled quartic-family potential and computes Z and V by
// composite Gauss-Legendre quadrature. Throws BadParameter on constraint
// violations (including a domain too small for the Maxwellian tails) and
// NonNormalizable if the weight cannot be normalized.
PotentialSpec make_potential(double gamma, double theta, double delta, bool sigma,
                             double domain_R = 10.0, int quad_points = 32, int quad_panels = 200);

// The quadratic known-answer configuration W(v) = v^2/2 at a given vartheta.
PotentialSpec make_quadratic_reference(double vartheta, double domain_R = 10.0,
                                       int quad_points = 32, int quad_panels = 200);

// W, W' and W'' at v. For sigma = 1 the |v|^3 term uses the continuous
// extensions d|v|^3/dv = 3 v|v| and d^2|v|^3/dv^2 = 6|v|.
WDerivs eval_W(const PotentialSpec& spec, double v);

// Potential of the unitarily equivalent Schroedinger operator
//   Phi(v) = -W''(v)/2 + W'(v)^2 / (4 vartheta).
double schrodinger_potential(const PotentialSpec& spec, double v);

// M(v) = Z^-1 exp(-W(v)/vartheta) and its square root.
double maxwellian(const PotentialSpec& spec, double v);
double maxwellian_sqrt(const PotentialSpec& spec, double v);

// Right-hand sides of the two cell problems, mapped to the Schroedinger side:
//   chi:   -(v - V) sqrt(M(v))
//   kappa: -(1/vartheta) W'(v) sqrt(M(v))
enum class RhsKind { chi, kappa };
double rhs_eval(const PotentialSpec& spec, RhsKind kind, double v);

}  // namespace fpspectral
