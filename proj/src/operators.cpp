#include "fpspectral/operators.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "fpspectral/errors.hpp"

namespace fpspectral {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// General banded scratch matrix storing both triangles so the symmetry of the
// raw assembly can be checked before folding into symmetric storage.
class FullBandScratch {
public:
  FullBandScratch(int n, int kd) : n_(n), kd_(kd), data_(static_cast<std::size_t>(n) * (2 * kd + 1), 0.0) {}

  double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * (2 * kd_ + 1) + (j - i + kd_)]; }
  double at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * (2 * kd_ + 1) + (j - i + kd_)];
  }

  // Max |A - A^T| and max |A| over the band.
  void symmetry_deviation(double& dev, double& scale) const {
    dev = 0.0;
    scale = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = std::max(0, i - kd_); j <= std::min(n_ - 1, i + kd_); ++j) {
        scale = std::max(scale, std::abs(at(i, j)));
        if (j > i) dev = std::max(dev, std::abs(at(i, j) - at(j, i)));
      }
    }
  }

  SymBand symmetrized() const {
    SymBand out(n_, kd_);
    for (int i = 0; i < n_; ++i) {
      for (int j = std::max(0, i - kd_); j <= i; ++j) {
        out.at(i, j) = 0.5 * (at(i, j) + at(j, i));
      }
    }
    return out;
  }

private:
  int n_;
  int kd_;
  std::vector<double> data_;
};

}  // namespace

DiscreteOperator assemble(const Mesh& mesh, const PotentialSpec& spec) {
  const int p = mesh.degree;
  const int n = mesh.n_interior();
  const int last = mesh.n_nodes() - 1;
  const std::size_t nq = mesh.quad.size();
  const double vartheta = spec.vartheta;

  FullBandScratch a_full(n, p), b_full(n, p);
  std::vector<double> phi_q(nq);

  for (int e = 0; e < mesh.n_elements; ++e) {
    const int base = mesh.first_node(e);
    const double left = mesh.nodes[base];
    const double right = mesh.nodes[base + p];
    const double half = 0.5 * (right - left);
    const double mid = 0.5 * (left + right);

    for (std::size_t q = 0; q < nq; ++q) {
      const double vq = mid + half * mesh.quad.points[q];
      const double phi = schrodinger_potential(spec, vq);
      if (!std::isfinite(phi)) {
        throw AssemblyFailure("assemble: Schroedinger potential not finite at v = " + num(vq));
      }
      phi_q[q] = phi;
    }

    for (int i = 0; i <= p; ++i) {
      const int gi = base + i;
      if (gi == 0 || gi == last) continue;
      for (int j = 0; j <= p; ++j) {
        const int gj = base + j;
        if (gj == 0 || gj == last) continue;
        double aa = 0.0, bb = 0.0;
        for (std::size_t q = 0; q < nq; ++q) {
          const double w = mesh.quad.weights[q];
          aa += w * (vartheta * mesh.basis_der[i][q] * mesh.basis_der[j][q] / (half * half) +
                     phi_q[q] * mesh.basis_val[i][q] * mesh.basis_val[j][q]);
          bb += w * mesh.basis_val[i][q] * mesh.basis_val[j][q];
        }
        a_full.at(gi - 1, gj - 1) += aa * half;
        b_full.at(gi - 1, gj - 1) += bb * half;
      }
    }
  }

  double dev = 0.0, scale = 0.0;
  a_full.symmetry_deviation(dev, scale);
  if (scale > 0.0 && dev > 1e-13 * scale) {
    throw AssemblyFailure("assemble: stiffness asymmetry " + num(dev / scale) +
                          " exceeds 1e-13 relative");
  }

  DiscreteOperator op;
  op.A = a_full.symmetrized();
  op.B = b_full.symmetrized();
  op.semi_bandwidth = p;
  return op;
}

DiscreteOperator assemble_fd(double R, int n_points, const PotentialSpec& spec) {
  if (!(R > 0.0)) throw BadParameter("assemble_fd: R must be positive");
  if (n_points < 3) throw BadParameter("assemble_fd: need at least three grid points");
  if (n_points % 2 == 0) throw BadParameter("assemble_fd: n_points must be odd so a grid point lies at v = 0");

  const int n = n_points - 2;
  const double h = 2.0 * R / (n_points - 1);
  const double vartheta = spec.vartheta;

  DiscreteOperator op;
  op.A = SymBand(n, 1);
  op.B = SymBand(n, 0);
  op.semi_bandwidth = 1;
  for (int i = 0; i < n; ++i) {
    const double v = -R + (i + 1) * h;
    const double phi = schrodinger_potential(spec, v);
    if (!std::isfinite(phi)) {
      throw AssemblyFailure("assemble_fd: Schroedinger potential not finite at v = " + num(v));
    }
    op.A.at(i, i) = h * (2.0 * vartheta / (h * h) + phi);
    if (i > 0) op.A.at(i, i - 1) = -h * vartheta / (h * h);
    op.B.at(i, i) = h;
  }
  return op;
}

void dump_operator(const DiscreteOperator& op, std::ostream& a_stream, std::ostream& b_stream) {
  op.A.write_triplets(a_stream);
  op.B.write_triplets(b_stream);
}

}  // namespace fpspectral
