#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "latkit/spectral.hpp"
#include "test_support.hpp"

using namespace latkit;
using testsupport::random_nonneg_matrix;
using testsupport::rho_squaring_oracle;

TEST_CASE("identity matrix") {
  const auto r = spectral_radius(Matrix::identity(4));
  CHECK(r.rho == 1.0);
  CHECK(r.iterations == 0);  // every component is trivial
  CHECK(r.residual == 0.0);
}

TEST_CASE("nilpotent upper shift is exactly zero") {
  Matrix a(5, 5);
  for (int i = 0; i + 1 < 5; ++i) a(i, i + 1) = 1.0;
  CHECK(spectral_radius(a).rho == 0.0);
}

TEST_CASE("rank one all-ones block") {
  Matrix a(2, 2, 1.0);
  const auto r = spectral_radius(a);
  CHECK(r.rho == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(spectral_radius(Matrix(2, 3)), lattice_error);
  Matrix neg(2, 2);
  neg(0, 1) = -0.5;
  CHECK_THROWS_AS(spectral_radius(neg), lattice_error);
  Matrix nan(1, 1);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(spectral_radius(nan), lattice_error);
  CHECK_THROWS_AS(spectral_radius(Matrix::identity(2), SpectralOptions{0.0, 100}),
                  lattice_error);
}

TEST_CASE("iteration cap raises no-convergence") {
  const auto a = random_nonneg_matrix(6, 99, 0.9);
  try {
    spectral_radius(a, SpectralOptions{1e-10, 2});
    FAIL("expected E_NO_CONVERGENCE");
  } catch (const lattice_error& e) {
    CHECK(e.code() == errc::no_convergence);
  }
}

TEST_CASE("matches the squaring oracle on 100 random matrices") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto a = random_nonneg_matrix(8, 1000 + s);
    const auto r = spectral_radius(a);
    const double expected = rho_squaring_oracle(a);
    CAPTURE(s);
    CHECK(std::abs(r.rho - expected) <= 1e-6);
  }
}

TEST_CASE("positive scaling equivariance") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto a = random_nonneg_matrix(7, 2000 + s);
    std::mt19937_64 eng(s);
    const double c = 0.25 + 3.0 * testsupport::uniform01(eng);
    Matrix scaled = a;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) scaled(i, j) = c * a(i, j);
    const double lhs = spectral_radius(scaled).rho;
    const double rhs = c * spectral_radius(a).rho;
    CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, rhs));
  }
}

TEST_CASE("permutation invariance") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const int n = 6;
    const auto a = random_nonneg_matrix(n, 3000 + s);
    std::mt19937_64 eng(s ^ 0xbeef);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[testsupport::bounded(eng, i + 1)]);
    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(perm[i], perm[j]) = a(i, j);
    CHECK(std::abs(spectral_radius(p).rho - spectral_radius(a).rho) <= 1e-9);
  }
}

TEST_CASE("row sum bounds on strongly connected matrices") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int n = 8;
    auto a = random_nonneg_matrix(n, 4000 + s, 0.4);
    // splice in a cycle so the digraph is strongly connected
    for (int i = 0; i < n; ++i)
      if (a(i, (i + 1) % n) == 0.0) a(i, (i + 1) % n) = 0.3;
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += a(i, j);
      lo = std::min(lo, row);
      hi = std::max(hi, row);
    }
    const double rho = spectral_radius(a).rho;
    CHECK(rho >= lo - 1e-9);
    CHECK(rho <= hi + 1e-9);
  }
}

TEST_CASE("reducible matrices take the maximum over diagonal blocks") {
  // two 2-cycles of different weight joined one-way
  Matrix a(4, 4);
  a(0, 1) = a(1, 0) = 0.5;  // rho 0.5
  a(2, 3) = a(3, 2) = 0.9;  // rho 0.9
  a(1, 2) = 0.7;            // one-way bridge, no new cycles
  const auto r = spectral_radius(a);
  CHECK(r.rho == doctest::Approx(0.9).epsilon(1e-10));
}

TEST_CASE("empty matrix") {
  CHECK(spectral_radius(Matrix()).rho == 0.0);
}
