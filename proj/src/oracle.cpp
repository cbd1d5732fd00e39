#include "fpspectral/oracle.hpp"

#include <cmath>

#include "fpspectral/errors.hpp"
#include "fpspectral/quadrature.hpp"

namespace fpspectral {

OracleResult drift_oracle(const PotentialSpec& spec, int quad_points, int quad_panels) {
  const double R = spec.domain_R;
  const auto integrand = [&spec](double v) {
    const double d = spec.V - v;
    return d * d * maxwellian(spec, v);
  };
  const double coarse = integrate(integrand, -R, R, quad_panels, quad_points) / spec.vartheta;
  const double fine = integrate(integrand, -R, R, 2 * quad_panels, quad_points) / spec.vartheta;

  OracleResult result;
  result.K_star = fine;
  result.quad_error_estimate = std::abs(fine - coarse);
  if (!(result.K_star > 0.0) || !std::isfinite(result.K_star)) {
    throw NonConvergentQuadrature("drift_oracle: reference drift coefficient is not positive/finite");
  }
  if (result.quad_error_estimate > 1e-8 * std::abs(result.K_star)) {
    throw NonConvergentQuadrature("drift_oracle: nested quadrature levels differ by more than 1e-8 relative");
  }
  result.K_star_rect =
      integrate_rectangle(integrand, -R, R, quad_panels * quad_points) / spec.vartheta;
  return result;
}

QuadraticReference quadratic_reference(double vartheta, int n_eigenvalues) {
  if (!(vartheta > 0.0)) throw BadParameter("quadratic_reference: vartheta must be positive");
  if (n_eigenvalues < 1) throw BadParameter("quadratic_reference: need at least one eigenvalue");
  QuadraticReference ref;
  // D = int v^2 M dv = vartheta for the Gaussian equilibrium, K = D / vartheta.
  ref.D_exact = vartheta;
  ref.K_exact = 1.0;
  // -vartheta u'' + (v^2/(4 vartheta) - 1/2) u: a harmonic oscillator whose
  // level spacing is exactly 1 for every vartheta, shifted to start at 0.
  for (int n = 0; n < n_eigenvalues; ++n) ref.lambda_exact.push_back(static_cast<double>(n));
  return ref;
}

}  // namespace fpspectral
