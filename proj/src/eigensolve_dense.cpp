#include <Eigen/Dense>

#include "fpspectral/eigensolve.hpp"
#include "fpspectral/errors.hpp"

namespace fpspectral {

namespace internal {
void fix_sign(std::vector<double>& x);
}

// Dense route for the generalized symmetric-definite pencil; used for small
// problems and as the independent cross-check of the Lanczos path.
SpectralDecomposition dense_eigensolve(const DiscreteOperator& op, int count) {
  const int n = op.dim();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  const int kd = std::max(op.A.semi_bandwidth(), op.B.semi_bandwidth());
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - kd); j <= std::min(n - 1, i + kd); ++j) {
      a(i, j) = op.A.at(i, j);
      b(i, j) = op.B.at(i, j);
    }
  }

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, b,
                                                                   Eigen::Ax_lBx | Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw FactorizationFailure("dense eigensolve: generalized solver failed (mass matrix not SPD?)");
  }

  SpectralDecomposition dec;
  for (int i = 0; i < count; ++i) {
    dec.eigenvalues.push_back(solver.eigenvalues()(i));
    std::vector<double> x(n);
    Eigen::Map<Eigen::VectorXd>(x.data(), n) = solver.eigenvectors().col(i);
    internal::fix_sign(x);
    dec.eigenvectors.push_back(std::move(x));
  }
  for (int i = 0; i < count; ++i) {
    std::vector<double> ax = op.A.matvec(dec.eigenvectors[i]);
    std::vector<double> bx = op.B.matvec(dec.eigenvectors[i]);
    double rnorm = 0.0, bnorm = 0.0;
    for (int j = 0; j < n; ++j) {
      const double r = ax[j] - dec.eigenvalues[i] * bx[j];
      rnorm += r * r;
      bnorm += bx[j] * bx[j];
    }
    dec.residuals.push_back(std::sqrt(rnorm) / std::sqrt(bnorm));
  }
  return dec;
}

}  // namespace fpspectral
