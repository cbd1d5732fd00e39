#include <doctest.h>

#include <cmath>

#include "fpspectral/eigensolve.hpp"
#include "fpspectral/errors.hpp"
#include "fpspectral/operators.hpp"

using namespace fpspectral;

namespace {

double b_inner(const DiscreteOperator& op, const std::vector<double>& x, const std::vector<double>& y) {
  const std::vector<double> by = op.B.matvec(y);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * by[i];
  return acc;
}

}  // namespace

TEST_CASE("quadratic reference spectrum is 0, 1, 2, ... on a fine mesh") {
  const PotentialSpec spec = make_quadratic_reference(1.0);
  const Mesh mesh = build_mesh(10.0, 200, 4, 11);
  const DiscreteOperator op = assemble(mesh, spec);
  const SpectralDecomposition dec = lowest_eigenpairs(op, 7, 1e-6);
  for (int n = 0; n <= 5; ++n) CHECK(std::abs(dec.eigenvalues[n] - n) < 1e-8);
  for (double r : dec.residuals) CHECK(r <= 1e-6);
}

TEST_CASE("dense and lanczos routes agree") {
  const PotentialSpec spec = make_quadratic_reference(1.0);
  const Mesh mesh = build_mesh(10.0, 100, 4, 9);
  const DiscreteOperator op = assemble(mesh, spec);
  const int count = 6;
  const SpectralDecomposition dense = lowest_eigenpairs(op, count, 1e-8, EigSolver::dense);
  const SpectralDecomposition lanczos = lowest_eigenpairs(op, count, 1e-8, EigSolver::lanczos);

  CHECK(std::abs(dense.eigenvalues[0] - lanczos.eigenvalues[0]) < 1e-10);
  for (int k = 1; k < count; ++k) {
    CHECK(std::abs(dense.eigenvalues[k] - lanczos.eigenvalues[k]) <
          1e-10 * std::abs(dense.eigenvalues[k]));
  }
  for (int k = 0; k < count; ++k) {
    std::vector<double> diff(op.dim());
    for (int i = 0; i < op.dim(); ++i) diff[i] = dense.eigenvectors[k][i] - lanczos.eigenvectors[k][i];
    CHECK(std::sqrt(b_inner(op, diff, diff)) < 1e-8);
  }
}

TEST_CASE("eigenvectors are B-orthonormal") {
  const PotentialSpec spec = make_potential(1.0, 1.0, 0.0, false);
  const Mesh mesh = build_mesh(10.0, 60, 6, 13);
  const DiscreteOperator op = assemble(mesh, spec);
  for (EigSolver solver : {EigSolver::dense, EigSolver::lanczos}) {
    const SpectralDecomposition dec = lowest_eigenpairs(op, 6, 1e-7, solver);
    for (int i = 0; i < 6; ++i) {
      if (i) CHECK(dec.eigenvalues[i] >= dec.eigenvalues[i - 1]);
      for (int j = 0; j <= i; ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(b_inner(op, dec.eigenvectors[i], dec.eigenvectors[j]) - expected) < 1e-10);
      }
    }
  }
}

TEST_CASE("deterministic sign: quadratic first excited mode is positive on the right") {
  const PotentialSpec spec = make_quadratic_reference(1.0);
  const Mesh mesh = build_mesh(10.0, 100, 4, 9);
  const DiscreteOperator op = assemble(mesh, spec);
  for (EigSolver solver : {EigSolver::dense, EigSolver::lanczos}) {
    const SpectralDecomposition dec = lowest_eigenpairs(op, 3, 1e-8, solver);
    // Psi_1 ~ v sqrt(M): the node nearest v = 1.4 must carry a positive value
    int nearest = 1;
    for (int i = 1; i < mesh.n_nodes() - 1; ++i) {
      if (std::abs(mesh.nodes[i] - 1.4) < std::abs(mesh.nodes[nearest] - 1.4)) nearest = i;
    }
    CHECK(dec.eigenvectors[1][nearest - 1] > 0.0);
    CHECK(dec.eigenvectors[0][nearest - 1] > 0.0);  // ground state positive everywhere
  }
}

TEST_CASE("production-scale pencil has a clean kernel direction") {
  const PotentialSpec spec = make_potential(1.0, 1.0, 0.0, false);
  const Mesh mesh = build_mesh(10.0, 1000, 10, 21);
  const DiscreteOperator op = assemble(mesh, spec);
  SpectralDecomposition dec = lowest_eigenpairs(op, 6, 1e-3);
  CHECK(std::abs(dec.eigenvalues[0]) < 1e-8);
  const ZeroModeInfo info = identify_zero_mode(dec, 1e-8);
  CHECK(info.index == 0);
  CHECK(info.gap > 0.5);  // order-one spectral gap in the mild regime

  // the kernel direction is the sqrt-Maxwellian
  std::vector<double> m(mesh.n_interior());
  for (int i = 1; i < mesh.n_nodes() - 1; ++i) m[i - 1] = maxwellian_sqrt(spec, mesh.nodes[i]);
  const double mm = b_inner(op, m, m);
  const double overlap = b_inner(op, dec.eigenvectors[0], m) / std::sqrt(mm);
  CHECK(std::abs(overlap) >= 0.999);
}

TEST_CASE("zero mode identification on synthetic spectra") {
  SpectralDecomposition dec;
  dec.eigenvalues = {0.0, 5.0, 9.0};
  dec.eigenvectors.assign(3, std::vector<double>(3, 0.0));
  const ZeroModeInfo info = identify_zero_mode(dec, 1e-8);
  CHECK(info.index == 0);
  CHECK(info.gap == doctest::Approx(5.0));
  CHECK(dec.zero_mode.value() == 0);

  SpectralDecomposition collapsed;
  collapsed.eigenvalues = {1e-12, 5e-8, 1.0};  // 5e-8 < 10 * tol_zero
  collapsed.eigenvectors.assign(3, std::vector<double>(3, 0.0));
  CHECK_THROWS_AS(identify_zero_mode(collapsed, 1e-8), TunnellingCollapse);

  SpectralDecomposition negative_pair;
  negative_pair.eigenvalues = {-2e-9, 1e-9, 1.0};
  negative_pair.eigenvectors.assign(3, std::vector<double>(3, 0.0));
  CHECK_THROWS_AS(identify_zero_mode(negative_pair, 1e-8), TunnellingCollapse);

  SpectralDecomposition no_kernel;
  no_kernel.eigenvalues = {1e-6, 5.0, 9.0};
  no_kernel.eigenvectors.assign(3, std::vector<double>(3, 0.0));
  CHECK_THROWS_AS(identify_zero_mode(no_kernel, 1e-8), TunnellingCollapse);
}

TEST_CASE("solver input validation") {
  const PotentialSpec spec = make_quadratic_reference(1.0, 8.0);
  const DiscreteOperator one_dof = assemble_fd(8.0, 3, spec);
  CHECK_THROWS_AS(lowest_eigenpairs(one_dof, 2, 1e-6), BadParameter);

  const Mesh mesh = build_mesh(8.0, 4, 2, 5);
  const DiscreteOperator op = assemble(mesh, spec);
  CHECK_THROWS_AS(lowest_eigenpairs(op, 1, 1e-6), BadParameter);
  CHECK_THROWS_AS(lowest_eigenpairs(op, 3, -1.0), BadParameter);
}

TEST_CASE("a shifted pencil that cannot be factorized is reported") {
  DiscreteOperator indefinite;
  indefinite.A = SymBand(12, 0);
  indefinite.B = SymBand(12, 0);
  indefinite.semi_bandwidth = 0;
  for (int i = 0; i < 12; ++i) {
    indefinite.A.at(i, i) = -2.0;  // spectrum below any admissible shift
    indefinite.B.at(i, i) = 1.0;
  }
  CHECK_THROWS_AS(lowest_eigenpairs(indefinite, 2, 1e-3, EigSolver::lanczos), FactorizationFailure);
}

TEST_CASE("a tilt lifts the spectral gap") {
  double gap[2];
  int idx = 0;
  for (double delta : {1.0, 5.0}) {
    const PotentialSpec spec = make_potential(1.0, 1.0, delta, false);
    const Mesh mesh = build_mesh(10.0, 100, 6, 13);
    const DiscreteOperator op = assemble(mesh, spec);
    SpectralDecomposition dec = lowest_eigenpairs(op, 3, 1e-5);
    gap[idx++] = identify_zero_mode(dec, 1e-8).gap;
  }
  CHECK(gap[0] > 0.5);
  CHECK(gap[1] > gap[0]);
}

TEST_CASE("symmetry diagnostic: clean for the mild symmetric case, rejected for tilted") {
  const PotentialSpec spec = make_potential(1.0, 1.0, 0.0, false);
  const Mesh mesh = build_mesh(10.0, 100, 6, 13);
  const DiscreteOperator op = assemble(mesh, spec);
  const SpectralDecomposition dec = lowest_eigenpairs(op, 4, 1e-6);
  const std::vector<AsymmetryScore> scores = symmetry_diagnostic(dec, mesh, spec);
  REQUIRE(scores.size() == 2);
  CHECK(scores[0].score < 1e-8);
  CHECK(scores[1].score < 1e-8);
  CHECK_FALSE(scores[0].broken);
  CHECK_FALSE(scores[1].broken);

  const PotentialSpec tilted = make_potential(1.0, 1.0, 1.0, false);
  CHECK_THROWS_AS(symmetry_diagnostic(dec, mesh, tilted), BadParameter);
}
