#include "fpspectral/coefficients.hpp"

#include <cmath>
#include <cstdio>

#include "fpspectral/errors.hpp"

namespace fpspectral {

namespace {
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}
}  // namespace

std::vector<double> rhs_samples(const PotentialSpec& spec, const Mesh& mesh, RhsKind kind) {
  std::vector<double> out(mesh.n_nodes());
  for (int i = 0; i < mesh.n_nodes(); ++i) out[i] = rhs_eval(spec, kind, mesh.nodes[i]);
  return out;
}

namespace {

// integral of rhs * Psi for one eigenvector, composite left-endpoint
// rectangles on the global node set.
double project_rectangle(const Mesh& mesh, const std::vector<double>& rhs,
                         const std::vector<double>& coeffs) {
  const int n_nodes = mesh.n_nodes();
  double acc = 0.0;
  for (int i = 0; i < n_nodes - 1; ++i) {
    const double psi = (i == 0) ? 0.0 : coeffs[i - 1];
    acc += rhs[i] * psi * (mesh.nodes[i + 1] - mesh.nodes[i]);
  }
  return acc;
}

double project_gauss(const Mesh& mesh, const PotentialSpec& spec, RhsKind kind,
                     const std::vector<double>& coeffs) {
  const int p = mesh.degree;
  const int last = mesh.n_nodes() - 1;
  const std::size_t nq = mesh.quad.size();
  const double half = 0.5 * mesh.element_width();
  double acc = 0.0;
  for (int e = 0; e < mesh.n_elements; ++e) {
    const int base = mesh.first_node(e);
    const double mid = 0.5 * (mesh.nodes[base] + mesh.nodes[base + p]);
    for (std::size_t q = 0; q < nq; ++q) {
      double psi = 0.0;
      for (int i = 0; i <= p; ++i) {
        const int g = base + i;
        if (g == 0 || g == last) continue;
        psi += coeffs[g - 1] * mesh.basis_val[i][q];
      }
      const double vq = mid + half * mesh.quad.points[q];
      acc += mesh.quad.weights[q] * rhs_eval(spec, kind, vq) * psi;
    }
  }
  return acc * half;
}

}  // namespace

std::vector<double> project_rhs(const SpectralDecomposition& dec, const PotentialSpec& spec,
                                const Mesh& mesh, RhsKind kind, FourierRule rule,
                                double* zero_mode_projection) {
  if (dec.count() == 0 || static_cast<int>(dec.eigenvectors[0].size()) != mesh.n_interior()) {
    throw MeshMismatch("project_rhs: decomposition does not match the mesh");
  }
  const std::vector<double> samples =
      rule == FourierRule::composite_rectangle ? rhs_samples(spec, mesh, kind) : std::vector<double>();

  auto project_one = [&](const std::vector<double>& coeffs) {
    return rule == FourierRule::composite_rectangle ? project_rectangle(mesh, samples, coeffs)
                                                    : project_gauss(mesh, spec, kind, coeffs);
  };

  std::vector<double> out;
  for (int idx : dec.retained_indices()) out.push_back(project_one(dec.eigenvectors[idx]));
  if (zero_mode_projection) *zero_mode_projection = project_one(dec.eigenvectors[*dec.zero_mode]);
  return out;
}

FourierCoefficients fourier_coefficients(const SpectralDecomposition& dec, const PotentialSpec& spec,
                                         const Mesh& mesh, FourierRule rule) {
  FourierCoefficients fc;
  fc.rule = rule;
  fc.eta = project_rhs(dec, spec, mesh, RhsKind::chi, rule, &fc.eta_zero_mode);
  fc.omega = project_rhs(dec, spec, mesh, RhsKind::kappa, rule, &fc.omega_zero_mode);
  return fc;
}

CoefficientSeries truncated_coefficients(const SpectralDecomposition& dec,
                                         const std::vector<double>& eta,
                                         const std::vector<double>& omega, int N) {
  const std::vector<int> retained = dec.retained_indices();
  if (N < 1 || N > static_cast<int>(retained.size())) {
    throw BadParameter("truncated_coefficients: N out of range");
  }
  if (eta.size() < static_cast<std::size_t>(N) || omega.size() < static_cast<std::size_t>(N)) {
    throw BadParameter("truncated_coefficients: coefficient arrays shorter than N");
  }

  CoefficientSeries series;
  double d = 0.0, k = 0.0;
  for (int n = 0; n < N; ++n) {
    const double lambda = dec.eigenvalues[retained[n]];
    if (!(lambda > dec.tol_zero)) {
      throw DivisionHazard("truncated_coefficients: retained eigenvalue " + num(lambda) +
                           " lies within the zero tolerance");
    }
    d += eta[n] * eta[n] / lambda;
    k += eta[n] * omega[n] / lambda;
    series.lambda.push_back(lambda);
    series.eta.push_back(eta[n]);
    series.omega.push_back(omega[n]);
    series.D_partial.push_back(d);
    series.K_partial.push_back(k);
  }
  return series;
}

int auto_truncate(CoefficientSeries& series, double rel_tol) {
  if (!(rel_tol >= 0.0)) throw BadParameter("auto_truncate: rel_tol must be nonnegative");
  const int N = series.size();
  if (N < 3) throw BadParameter("auto_truncate: need at least three retained modes");

  auto increment = [](const std::vector<double>& partial, int n) {
    return n == 0 ? partial[0] : partial[n] - partial[n - 1];
  };

  for (int n = 2; n < N; ++n) {
    const double d_scale = std::max(std::abs(series.D_partial[n]), 1e-300);
    const double k_scale = std::max(std::abs(series.K_partial[n]), 1e-300);
    bool ok = true;
    for (int j = n - 2; j <= n; ++j) {
      if (!(std::abs(increment(series.D_partial, j)) < rel_tol * d_scale)) ok = false;
      if (!(std::abs(increment(series.K_partial, j)) < rel_tol * k_scale)) ok = false;
    }
    if (ok) {
      series.N_auto = n + 1;
      return series.N_auto;
    }
  }
  throw NoConvergence("auto_truncate: increments did not settle below rel_tol within " +
                      std::to_string(N) + " modes");
}

}  // namespace fpspectral
