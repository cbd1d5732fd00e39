#include "fpspectral/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>

#include "fpspectral/errors.hpp"

namespace fpspectral {

// Implemented in eigensolve_dense.cpp.
SpectralDecomposition dense_eigensolve(const DiscreteOperator& op, int count);

namespace internal {

// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating the
// eigenvector matrix. diag/off are destroyed; off has size n (last unused).
// z must come in as the matrix the rotations are applied to (identity for
// eigenvectors of T itself). Classic tql2 scheme.
void tridiag_ql(std::vector<double>& diag, std::vector<double>& off,
                std::vector<std::vector<double>>& z) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return;
  for (int i = 1; i < n; ++i) off[i - 1] = off[i];
  off[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= 1e-300 || std::abs(off[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter > 50) throw NoConvergence("tridiagonal QL: too many iterations");
        double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + off[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * off[i];
          const double b = c * off[i];
          r = std::hypot(f, g);
          off[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            off[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          for (auto& row : z) {
            f = row[i + 1];
            row[i + 1] = s * row[i] + c * f;
            row[i] = c * row[i] - s * f;
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0.0;
      }
    } while (m != l);
  }
}

// Deterministic pseudo-random start vector (splitmix64 bits mapped to
// [-0.5, 0.5)); a fixed seed keeps every run byte-reproducible.
std::vector<double> seeded_vector(int n, std::uint64_t seed) {
  std::vector<double> v(n);
  std::uint64_t state = seed;
  for (int i = 0; i < n; ++i) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    v[i] = static_cast<double>(z >> 11) * (1.0 / 9007199254740992.0) - 0.5;
  }
  return v;
}

void fix_sign(std::vector<double>& x) {
  double m = 0.0;
  for (double t : x) m = std::max(m, std::abs(t));
  if (m == 0.0) return;
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    if (std::abs(x[i]) > 1e-8 * m) {
      if (x[i] < 0.0) {
        for (double& t : x) t = -t;
      }
      return;
    }
  }
}

}  // namespace internal

namespace {

using internal::seeded_vector;
using internal::tridiag_ql;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

// Residual ||A x - lambda B x|| / ||B x||.
double pencil_residual(const DiscreteOperator& op, double lambda, const std::vector<double>& x) {
  std::vector<double> ax = op.A.matvec(x);
  std::vector<double> bx = op.B.matvec(x);
  double rnorm = 0.0, bnorm = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const double r = ax[i] - lambda * bx[i];
    rnorm += r * r;
    bnorm += bx[i] * bx[i];
  }
  return std::sqrt(rnorm) / std::sqrt(bnorm);
}

SpectralDecomposition lanczos_eigensolve(const DiscreteOperator& op, int count, double tol) {
  const int n = op.dim();
  // Shift just below the spectrum of the positive operator. The magnitude is
  // floored: a shift of -tol with a very small tol puts an eigenvalue ~1/tol
  // into the inverted operator, and the absolute accuracy of the tridiagonal
  // solve (~eps * ||T||) would then contaminate the interior Ritz pairs.
  const double shift = -std::max(tol, 1e-4);
  const BandCholesky factor(op.A.add_scaled(op.B, -shift));

  const int max_steps = std::min(n, std::max(4 * count + 40, 120));
  std::vector<std::vector<double>> basis;   // B-orthonormal Lanczos vectors
  std::vector<std::vector<double>> b_basis; // cached B * basis
  basis.reserve(max_steps + 1);
  b_basis.reserve(max_steps + 1);
  std::vector<double> alpha, beta;

  auto b_normalize = [&](std::vector<double>& v, std::vector<double>& bv) -> double {
    op.B.matvec(v, bv);
    const double norm = std::sqrt(dot(v, bv));
    if (norm > 0.0) {
      for (double& t : v) t /= norm;
      for (double& t : bv) t /= norm;
    }
    return norm;
  };

  auto full_reorth = [&](std::vector<double>& w) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const double c = dot(w, b_basis[i]);
        axpy(-c, basis[i], w);
      }
    }
  };

  {
    std::vector<double> v0 = seeded_vector(n, 0x5EEDF00Dull);
    std::vector<double> bv0(n);
    b_normalize(v0, bv0);
    basis.push_back(std::move(v0));
    b_basis.push_back(std::move(bv0));
  }

  // Extracts the `count` lowest Ritz pairs from the first k Lanczos steps,
  // cleans up B-orthonormality, fixes signs and computes true residuals.
  auto extract = [&](int k) -> SpectralDecomposition {
    std::vector<double> d(alpha.begin(), alpha.begin() + k);
    std::vector<double> e(k, 0.0);
    for (int i = 1; i < k; ++i) e[i] = beta[i - 1];
    std::vector<std::vector<double>> z(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i) z[i][i] = 1.0;
    tridiag_ql(d, e, z);

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] > d[b]; });

    SpectralDecomposition dec;
    for (int i = 0; i < count; ++i) {
      const int col = order[i];
      const double nu = d[col];
      if (!(nu > 0.0)) throw NoConvergence("lanczos: nonpositive Ritz value of the inverted operator");
      const double lambda = shift + 1.0 / nu;
      std::vector<double> x(n, 0.0);
      for (int j = 0; j < k; ++j) axpy(z[j][col], basis[j], x);
      dec.eigenvalues.push_back(lambda);
      dec.eigenvectors.push_back(std::move(x));
    }

    for (int i = 0; i < count; ++i) {
      auto& x = dec.eigenvectors[i];
      for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < i; ++j) {
          const auto bx = op.B.matvec(dec.eigenvectors[j]);
          axpy(-dot(x, bx), dec.eigenvectors[j], x);
        }
      }
      auto bx = op.B.matvec(x);
      const double norm = std::sqrt(dot(x, bx));
      if (!(norm > 0.0)) throw NoConvergence("lanczos: degenerate Ritz vector");
      for (double& t : x) t /= norm;
      internal::fix_sign(x);
    }
    for (int i = 0; i < count; ++i) {
      dec.residuals.push_back(pencil_residual(op, dec.eigenvalues[i], dec.eigenvectors[i]));
    }
    return dec;
  };

  auto residuals_ok = [&](const SpectralDecomposition& dec) {
    for (double r : dec.residuals) {
      if (!(r <= tol)) return false;
    }
    return true;
  };

  std::uint64_t reseed = 1;
  bool exhausted = false;
  int last_checked = 0;
  int last_extracted = 0;

  for (int j = 0; j < max_steps && !exhausted; ++j) {
    std::vector<double> w = factor.solve(b_basis[j]);
    if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
    const double a_j = dot(w, b_basis[j]);
    axpy(-a_j, basis[j], w);
    full_reorth(w);
    alpha.push_back(a_j);

    std::vector<double> bw(n);
    double b_j = b_normalize(w, bw);
    if (!std::isfinite(b_j)) throw NoConvergence("lanczos: breakdown with nonfinite norm");
    if (b_j < 1e-300 || b_j < 1e-14 * std::abs(a_j)) {
      // Invariant subspace found; restart with a fresh deterministic direction
      // (beta = 0 keeps the tridiagonal block structure honest).
      b_j = 0.0;
      if (static_cast<int>(basis.size()) >= n) {
        exhausted = true;
      } else {
        w = seeded_vector(n, 0xABCD1234ull * ++reseed);
        full_reorth(w);
        if (b_normalize(w, bw) < 1e-300) exhausted = true;
      }
    }
    beta.push_back(b_j);
    if (!exhausted) {
      basis.push_back(std::move(w));
      b_basis.push_back(std::move(bw));
    }

    const int k = static_cast<int>(alpha.size());
    if (k < std::max(count, 2)) continue;

    // Cheap convergence indicator from the last row of T's eigenvectors; the
    // true pencil residuals are verified before accepting. Near-degenerate
    // tunnelling clusters make the indicator unreliable, so a full check is
    // forced periodically regardless.
    bool promising = exhausted || j == max_steps - 1 || (k - last_extracted >= 32);
    if (!promising && (k - last_checked >= 8 || k == max_steps)) {
      std::vector<double> d = alpha;
      std::vector<double> e(k, 0.0);
      for (int i = 1; i < k; ++i) e[i] = beta[i - 1];
      std::vector<std::vector<double>> z(1, std::vector<double>(k, 0.0));
      z[0][k - 1] = 1.0;
      tridiag_ql(d, e, z);
      std::vector<int> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] > d[b]; });
      promising = true;
      const double nu_scale = std::abs(d[order[0]]);
      for (int i = 0; i < count && promising; ++i) {
        if (std::abs(beta[k - 1] * z[0][order[i]]) > 1e-12 * nu_scale) promising = false;
      }
      last_checked = k;
    }
    if (promising) {
      last_extracted = k;
      SpectralDecomposition dec = extract(k);
#ifdef FPSPECTRAL_DEBUG_LANCZOS
      std::fprintf(stderr, "[lanczos] k=%d:", k);
      for (int i = 0; i < count; ++i)
        std::fprintf(stderr, " (%.3e, r=%.1e)", dec.eigenvalues[i], dec.residuals[i]);
      std::fprintf(stderr, "\n");
#endif
      if (residuals_ok(dec)) return dec;
      if (exhausted || j == max_steps - 1) {
        throw NoConvergence("lanczos: residuals above tolerance after " + std::to_string(k) + " steps");
      }
    }
  }
  throw NoConvergence("lanczos: iteration budget exhausted before convergence");
}

}  // namespace

std::vector<int> SpectralDecomposition::retained_indices() const {
  if (!zero_mode) throw BadParameter("retained_indices: zero mode not identified");
  std::vector<int> idx;
  for (int i = 0; i < count(); ++i) {
    if (i != *zero_mode) idx.push_back(i);
  }
  return idx;
}

SpectralDecomposition lowest_eigenpairs(const DiscreteOperator& op, int count, double tol, EigSolver solver) {
  const int n = op.dim();
  if (count < 2) throw BadParameter("lowest_eigenpairs: need at least two eigenpairs");
  if (count > n) throw BadParameter("lowest_eigenpairs: count exceeds the pencil dimension");
  if (!(tol > 0.0)) throw BadParameter("lowest_eigenpairs: tolerance must be positive");

  SpectralDecomposition dec;
  bool solved = false;
  if (solver == EigSolver::dense || (solver == EigSolver::automatic && n <= 256)) {
    if (n > 2000) throw BadParameter("lowest_eigenpairs: dense solver limited to dimension 2000");
    dec = dense_eigensolve(op, count);
    solved = true;
  }
  if (!solved) {
    try {
      dec = lanczos_eigensolve(op, count, tol);
    } catch (const NoConvergence&) {
      if (solver == EigSolver::automatic && n <= 2000) {
        dec = dense_eigensolve(op, count);
      } else {
        throw;
      }
    }
  }

  for (int i = 0; i < count; ++i) {
    if (!(dec.residuals[i] <= tol)) {
      throw NoConvergence("lowest_eigenpairs: residual " + num(dec.residuals[i]) +
                          " of pair " + std::to_string(i) + " exceeds tolerance");
    }
  }
  return dec;
}

ZeroModeInfo identify_zero_mode(SpectralDecomposition& dec, double tol_zero) {
  if (dec.count() < 2) throw BadParameter("identify_zero_mode: need at least two eigenpairs");
  if (!(tol_zero > 0.0)) throw BadParameter("identify_zero_mode: tol_zero must be positive");

  int k_min = 0;
  for (int i = 1; i < dec.count(); ++i) {
    if (std::abs(dec.eigenvalues[i]) < std::abs(dec.eigenvalues[k_min])) k_min = i;
  }
  const double lambda_zero = dec.eigenvalues[k_min];
  double lambda_next = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dec.count(); ++i) {
    if (i != k_min) lambda_next = std::min(lambda_next, dec.eigenvalues[i]);
  }
  if (std::abs(lambda_zero) > tol_zero) {
    throw TunnellingCollapse("identify_zero_mode: smallest |eigenvalue| " + num(lambda_zero) +
                             " exceeds tol_zero; kernel direction unresolved");
  }
  if (!(lambda_next >= 10.0 * tol_zero)) {
    throw TunnellingCollapse("identify_zero_mode: spectral gap collapsed; next eigenvalue " +
                             num(lambda_next) + " is indistinguishable from the kernel at tol_zero " +
                             num(tol_zero));
  }
  dec.zero_mode = k_min;
  dec.gap = lambda_next - lambda_zero;
  dec.tol_zero = tol_zero;
  return {k_min, dec.gap};
}

std::vector<AsymmetryScore> symmetry_diagnostic(const SpectralDecomposition& dec, const Mesh& mesh,
                                                const PotentialSpec& spec, double s_tol) {
  if (!spec.symmetric()) {
    throw BadParameter("symmetry_diagnostic: only meaningful for symmetric potentials (delta = 0)");
  }
  const int n = mesh.n_interior();
  if (dec.count() < 2 || static_cast<int>(dec.eigenvectors[0].size()) != n) {
    throw MeshMismatch("symmetry_diagnostic: decomposition does not match the mesh");
  }

  std::vector<AsymmetryScore> scores;
  std::vector<double> mirrored(n), diff(n);
  for (int m = 0; m < 2; ++m) {
    const auto& x = dec.eigenvectors[m];
    // Interior node i mirrors to n-1-i; the uniform mesh maps nodes to nodes.
    for (int i = 0; i < n; ++i) mirrored[i] = x[n - 1 - i];
    const double norm = fem_l2_norm(mesh, x);
    double best = std::numeric_limits<double>::infinity();
    for (double parity : {1.0, -1.0}) {
      for (int i = 0; i < n; ++i) diff[i] = x[i] - parity * mirrored[i];
      best = std::min(best, fem_l2_norm(mesh, diff));
    }
    const double s = best / norm;
    scores.push_back({s, s > s_tol});
  }
  return scores;
}

}  // namespace fpspectral
