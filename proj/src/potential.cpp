#include "fpspectral/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fpspectral/errors.hpp"

namespace fpspectral {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Largest admissible Maxwellian density at the domain ends. Beyond this the
// homogeneous Dirichlet truncation would be visible in the results.
constexpr double kBoundaryMassTol = 1e-11;

void locate_minimum(PotentialSpec& spec) {
  const double R = spec.domain_R;
  double best_v = 0.0, best_w = eval_W(spec, 0.0).W;
  const int samples = 20000;
  for (int i = 0; i <= samples; ++i) {
    const double v = -R + 2.0 * R * i / samples;
    const double w = eval_W(spec, v).W;
    if (w < best_w) {
      best_w = w;
      best_v = v;
    }
  }
  double v = best_v;
  for (int it = 0; it < 30; ++it) {
    const WDerivs w = eval_W(spec, v);
    if (!(std::abs(w.d2W) > 1e-8)) break;
    const double step = w.dW / w.d2W;
    const double next = std::clamp(v - step, -R, R);
    if (next == v) break;
    v = next;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(v))) break;
  }
  const double refined = eval_W(spec, v).W;
  spec.W_min = std::min(best_w, refined);
}

void finish_normalization(PotentialSpec& spec) {
  locate_minimum(spec);
  const auto weight = [&spec](double v) {
    return std::exp(-(eval_W(spec, v).W - spec.W_min) / spec.vartheta);
  };
  const double R = spec.domain_R;
  const double I0 = integrate(weight, -R, R, spec.quad_panels, spec.quad_points);
  if (!std::isfinite(I0) || I0 <= 0.0) {
    throw NonNormalizable("potential: quadrature of exp(-W/vartheta) is " + num(I0));
  }
  spec.Z = I0;
  if (spec.symmetric()) {
    // Even weight, odd integrand: the mean vanishes identically.
    spec.V = 0.0;
  } else {
    const double I1 =
        integrate([&](double v) { return v * weight(v); }, -R, R, spec.quad_panels, spec.quad_points);
    spec.V = I1 / I0;
  }
  const double edge = std::max(maxwellian(spec, R), maxwellian(spec, -R));
  if (!(edge < kBoundaryMassTol)) {
    std::ostringstream msg;
    msg << "potential: M(+-R) = " << edge << " at R = " << R
        << "; enlarge the domain so the equilibrium tails are negligible";
    throw BadParameter(msg.str());
  }
}

}  // namespace

std::string PotentialSpec::describe() const {
  std::ostringstream os;
  if (family == Family::quadratic_reference) {
    os << "W = v^2/2, vartheta = " << vartheta;
  } else {
    os << "quartic family gamma = " << gamma << ", theta = " << theta << ", delta = " << delta
       << ", sigma = " << (sigma ? 1 : 0);
  }
  return os.str();
}

PotentialSpec make_potential(double gamma, double theta, double delta, bool sigma,
                             double domain_R, int quad_points, int quad_panels) {
  if (!(gamma > 0.0)) throw BadParameter("potential: gamma must be positive");
  if (!(theta > 0.0)) throw BadParameter("potential: theta must be positive");
  if (!(delta >= 0.0)) throw BadParameter("potential: delta must be nonnegative");
  if (!(domain_R > 0.0)) throw BadParameter("potential: domain_R must be positive");
  if (quad_points < 2 || quad_panels < 2) throw BadParameter("potential: quadrature rule too small");
  if (quad_panels % 2 != 0) throw BadParameter("potential: quad_panels must be even so a panel ends at v = 0");

  PotentialSpec spec;
  spec.family = PotentialSpec::Family::quartic;
  spec.gamma = gamma;
  spec.theta = theta;
  spec.delta = delta;
  spec.sigma = sigma;
  spec.vartheta = theta / gamma;
  spec.domain_R = domain_R;
  spec.quad_points = quad_points;
  spec.quad_panels = quad_panels;
  finish_normalization(spec);
  return spec;
}

PotentialSpec make_quadratic_reference(double vartheta, double domain_R, int quad_points, int quad_panels) {
  if (!(vartheta > 0.0)) throw BadParameter("potential: vartheta must be positive");
  if (!(domain_R > 0.0)) throw BadParameter("potential: domain_R must be positive");
  if (quad_points < 2 || quad_panels < 2) throw BadParameter("potential: quadrature rule too small");
  if (quad_panels % 2 != 0) throw BadParameter("potential: quad_panels must be even so a panel ends at v = 0");

  PotentialSpec spec;
  spec.family = PotentialSpec::Family::quadratic_reference;
  spec.gamma = 1.0;
  spec.theta = vartheta;
  spec.delta = 0.0;
  spec.sigma = false;
  spec.vartheta = vartheta;
  spec.domain_R = domain_R;
  spec.quad_points = quad_points;
  spec.quad_panels = quad_panels;
  finish_normalization(spec);
  return spec;
}

WDerivs eval_W(const PotentialSpec& spec, double v) {
  if (spec.family == PotentialSpec::Family::quadratic_reference) {
    return {0.5 * v * v, v, 1.0};
  }
  const double v2 = v * v;
  const double av = std::abs(v);
  const double sq = std::sqrt(spec.gamma);
  WDerivs out;
  out.W = 0.25 * v2 * v2;
  out.dW = v2 * v;
  out.d2W = 3.0 * v2;
  if (spec.sigma) {
    out.W -= sq / 3.0 * av * av * av;
    out.dW -= sq * v * av;
    out.d2W -= 2.0 * sq * av;
  } else {
    out.W -= 0.5 * v2;
    out.dW -= v;
    out.d2W -= 1.0;
  }
  if (spec.delta != 0.0) {
    const double tilt = spec.delta / sq;
    out.W -= tilt * v;
    out.dW -= tilt;
  }
  return out;
}

double schrodinger_potential(const PotentialSpec& spec, double v) {
  const WDerivs w = eval_W(spec, v);
  return -0.5 * w.d2W + w.dW * w.dW / (4.0 * spec.vartheta);
}

double maxwellian(const PotentialSpec& spec, double v) {
  return std::exp(-(eval_W(spec, v).W - spec.W_min) / spec.vartheta) / spec.Z;
}

double maxwellian_sqrt(const PotentialSpec& spec, double v) {
  return std::exp(-0.5 * (eval_W(spec, v).W - spec.W_min) / spec.vartheta) / std::sqrt(spec.Z);
}

double rhs_eval(const PotentialSpec& spec, RhsKind kind, double v) {
  switch (kind) {
    case RhsKind::chi:
      return -(v - spec.V) * maxwellian_sqrt(spec, v);
    case RhsKind::kappa:
      return -eval_W(spec, v).dW / spec.vartheta * maxwellian_sqrt(spec, v);
  }
  return 0.0;
}

}  // namespace fpspectral
