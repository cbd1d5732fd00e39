#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace fpspectral {

// Symmetric banded matrix of dimension n with semi-bandwidth kd; only the
// lower triangle is stored, diagonal by diagonal: entry (i, i-k) lives at
// bands[k][i] for k = 0..kd.
class SymBand {
public:
  SymBand() = default;
  SymBand(int n, int kd);

  int dim() const { return n_; }
  int semi_bandwidth() const { return kd_; }

  // Entry accessors for |i-j| <= kd; the symmetric image is handled.
  double& at(int i, int j);
  double at(int i, int j) const;
  bool in_band(int i, int j) const;

  // y = A x
  void matvec(const std::vector<double>& x, std::vector<double>& y) const;
  std::vector<double> matvec(const std::vector<double>& x) const;

  double max_abs() const;

  // Plain-text sparse triplet dump, one "row col value" line per stored
  // entry of the full matrix, 17 significant digits.
  void write_triplets(std::ostream& os) const;

  // this + s * other, bandwidths may differ.
  SymBand add_scaled(const SymBand& other, double s) const;

private:
  int n_ = 0;
  int kd_ = 0;
  std::vector<std::vector<double>> bands_;
};

// Lower-triangular banded Cholesky factor; same storage layout as SymBand.
class BandCholesky {
public:
  // Factorizes A = L L^T. Throws FactorizationFailure on a nonpositive or
  // nonfinite pivot.
  explicit BandCholesky(const SymBand& a);

  // Solves L L^T x = b.
  std::vector<double> solve(const std::vector<double>& b) const;
  void solve_inplace(std::vector<double>& b) const;

  int dim() const { return n_; }

private:
  int n_ = 0;
  int kd_ = 0;
  std::vector<std::vector<double>> bands_;
};

}  // namespace fpspectral
