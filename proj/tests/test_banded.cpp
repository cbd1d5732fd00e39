#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "fpspectral/banded.hpp"
#include "fpspectral/errors.hpp"

using namespace fpspectral;

namespace {

// Deterministic pseudo-random SPD band: diagonally dominant by construction.
SymBand random_spd(int n, int kd, std::uint64_t seed) {
  SymBand a(n, kd);
  std::uint64_t state = seed;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<double>(state % 1000) / 1000.0 - 0.5;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - kd); j < i; ++j) a.at(i, j) = next();
    a.at(i, i) = 2.0 * kd + 1.0 + next();
  }
  return a;
}

std::vector<double> dense_matvec(const SymBand& a, const std::vector<double>& x) {
  std::vector<double> y(a.dim(), 0.0);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (a.in_band(i, j)) y[i] += a.at(i, j) * x[j];
    }
  }
  return y;
}

}  // namespace

TEST_CASE("banded matvec matches a dense reference") {
  const SymBand a = random_spd(40, 3, 42);
  std::vector<double> x(40);
  for (int i = 0; i < 40; ++i) x[i] = std::sin(0.37 * i) + 0.25;
  const std::vector<double> lhs = a.matvec(x), rhs = dense_matvec(a, x);
  for (int i = 0; i < 40; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-14));
}

TEST_CASE("banded cholesky solves the system it factorized") {
  for (int kd : {0, 1, 4, 10}) {
    const int n = 60;
    const SymBand a = random_spd(n, kd, 1234 + kd);
    const BandCholesky chol(a);
    std::vector<double> x_true(n);
    for (int i = 0; i < n; ++i) x_true[i] = std::cos(0.13 * i);
    const std::vector<double> b = a.matvec(x_true);
    const std::vector<double> x = chol.solve(b);
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-11));
  }
}

TEST_CASE("cholesky rejects an indefinite matrix") {
  SymBand a(5, 1);
  for (int i = 0; i < 5; ++i) a.at(i, i) = -1.0;
  CHECK_THROWS_AS(BandCholesky{a}, FactorizationFailure);
}

TEST_CASE("add_scaled merges different bandwidths") {
  SymBand a(6, 2), b(6, 0);
  for (int i = 0; i < 6; ++i) {
    a.at(i, i) = 1.0;
    if (i > 1) a.at(i, i - 2) = 0.5;
    b.at(i, i) = 2.0;
  }
  const SymBand c = a.add_scaled(b, 3.0);
  CHECK(c.at(0, 0) == doctest::Approx(7.0));
  CHECK(c.at(4, 2) == doctest::Approx(0.5));
  CHECK(c.semi_bandwidth() == 2);
}

TEST_CASE("triplet dump is complete and round-trips values") {
  SymBand a(3, 1);
  a.at(0, 0) = 1.0;
  a.at(1, 0) = -0.125;
  a.at(1, 1) = 2.0;
  a.at(2, 1) = 0.0625;
  a.at(2, 2) = 3.0;
  std::ostringstream os;
  a.write_triplets(os);
  std::istringstream is(os.str());
  int count = 0, i, j;
  double v;
  bool found_sym = false;
  while (is >> i >> j >> v) {
    ++count;
    CHECK(v == a.at(i, j));
    if (i == 0 && j == 1) found_sym = true;
  }
  CHECK(count == 7);  // full matrix entries within the band
  CHECK(found_sym);   // the upper triangle is emitted too
}
