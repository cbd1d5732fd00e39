#include "fpspectral/banded.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "fpspectral/errors.hpp"

namespace fpspectral {

SymBand::SymBand(int n, int kd) : n_(n), kd_(kd) {
  if (n < 1 || kd < 0) throw BadParameter("SymBand: invalid dimensions");
  bands_.assign(kd_ + 1, std::vector<double>(n_, 0.0));
}

bool SymBand::in_band(int i, int j) const {
  return std::abs(i - j) <= kd_;
}

double& SymBand::at(int i, int j) {
  if (j > i) std::swap(i, j);
  return bands_[i - j][i];
}

double SymBand::at(int i, int j) const {
  if (j > i) std::swap(i, j);
  const int k = i - j;
  if (k > kd_ || i >= n_ || j < 0) return 0.0;
  return bands_[k][i];
}

void SymBand::matvec(const std::vector<double>& x, std::vector<double>& y) const {
  y.assign(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = bands_[0][i] * x[i];
    const int kmax = std::min(kd_, i);
    for (int k = 1; k <= kmax; ++k) {
      acc += bands_[k][i] * x[i - k];
      y[i - k] += bands_[k][i] * x[i];
    }
    y[i] += acc;
  }
}

std::vector<double> SymBand::matvec(const std::vector<double>& x) const {
  std::vector<double> y;
  matvec(x, y);
  return y;
}

double SymBand::max_abs() const {
  double m = 0.0;
  for (const auto& band : bands_) {
    for (double v : band) m = std::max(m, std::abs(v));
  }
  return m;
}

void SymBand::write_triplets(std::ostream& os) const {
  char buf[64];
  for (int i = 0; i < n_; ++i) {
    for (int j = std::max(0, i - kd_); j <= std::min(n_ - 1, i + kd_); ++j) {
      std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", i, j, at(i, j));
      os << buf;
    }
  }
}

SymBand SymBand::add_scaled(const SymBand& other, double s) const {
  if (other.n_ != n_) throw BadParameter("SymBand: dimension mismatch in add_scaled");
  SymBand out(n_, std::max(kd_, other.kd_));
  for (int k = 0; k <= out.kd_; ++k) {
    for (int i = k; i < n_; ++i) {
      double v = 0.0;
      if (k <= kd_) v += bands_[k][i];
      if (k <= other.kd_) v += s * other.bands_[k][i];
      out.bands_[k][i] = v;
    }
  }
  return out;
}

BandCholesky::BandCholesky(const SymBand& a) : n_(a.dim()), kd_(a.semi_bandwidth()) {
  bands_.assign(kd_ + 1, std::vector<double>(n_, 0.0));
  for (int k = 0; k <= kd_; ++k) {
    for (int i = k; i < n_; ++i) bands_[k][i] = a.at(i, i - k);
  }
  // Column-by-column banded Cholesky.
  for (int j = 0; j < n_; ++j) {
    double d = bands_[0][j];
    const int kmin = std::max(0, j - kd_);
    for (int k = kmin; k < j; ++k) {
      const double ljk = bands_[j - k][j];
      d -= ljk * ljk;
    }
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw FactorizationFailure("banded Cholesky: nonpositive pivot at column " + std::to_string(j));
    }
    const double dj = std::sqrt(d);
    bands_[0][j] = dj;
    const int imax = std::min(n_ - 1, j + kd_);
    for (int i = j + 1; i <= imax; ++i) {
      double s = bands_[i - j][i];
      const int cmin = std::max({0, i - kd_, j - kd_});
      for (int k = cmin; k < j; ++k) {
        s -= bands_[i - k][i] * bands_[j - k][j];
      }
      bands_[i - j][i] = s / dj;
    }
  }
}

void BandCholesky::solve_inplace(std::vector<double>& b) const {
  // Forward: L y = b.
  for (int i = 0; i < n_; ++i) {
    double s = b[i];
    const int kmax = std::min(kd_, i);
    for (int k = 1; k <= kmax; ++k) s -= bands_[k][i] * b[i - k];
    b[i] = s / bands_[0][i];
  }
  // Backward: L^T x = y.
  for (int i = n_ - 1; i >= 0; --i) {
    double s = b[i];
    const int kmax = std::min(kd_, n_ - 1 - i);
    for (int k = 1; k <= kmax; ++k) s -= bands_[k][i + k] * b[i + k];
    b[i] = s / bands_[0][i];
  }
}

std::vector<double> BandCholesky::solve(const std::vector<double>& b) const {
  std::vector<double> x = b;
  solve_inplace(x);
  return x;
}

}  // namespace fpspectral
