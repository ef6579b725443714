#include <doctest.h>

#include <cmath>

#include "monoclass/catalog.hpp"
#include "monoclass/generators.hpp"
#include "monoclass/numerics.hpp"

using namespace monoclass;

namespace {
const Tolerance tol{};
}

TEST_CASE("sym_eigen: diagonal and symmetry-forced spectra") {
  const EigenSym d = sym_eigen(Matrix::from_rows({{2, 0}, {0, 3}}), tol);
  CHECK(d.values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(d.values[1] == doctest::Approx(3.0).epsilon(1e-12));

  const EigenSym swap = sym_eigen(Matrix::from_rows({{0, 1}, {1, 0}}), tol);
  CHECK(swap.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(swap.values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sym_eigen: spectrum of the 3x3 example's symmetric part") {
  const Matrix sym = symmetric_part(example_3x3());
  const EigenSym eig = sym_eigen(sym, tol);
  const double lo = 0.5 * (3.0 - std::sqrt(3.0));
  const double hi = 0.5 * (3.0 + std::sqrt(3.0));
  CHECK(std::fabs(eig.values[0]) <= 1e-10);
  CHECK(eig.values[1] == doctest::Approx(lo).epsilon(1e-10));
  CHECK(eig.values[2] == doctest::Approx(hi).epsilon(1e-10));
}

TEST_CASE("sym_eigen: residual and orthonormality bounds") {
  Rand rng(7);
  for (int t = 0; t < 50; ++t) {
    const int d = rng.uniform_int(1, 8);
    const Matrix m = random_matrix(d, d, rng).symmetrized();
    const EigenSym eig = sym_eigen(m, tol);
    for (int k = 0; k < d; ++k) {
      const Vec v = eig.vectors.column(k);
      const Vec mv = m.apply(v);
      const Vec lv = scaled(v, eig.values[k]);
      CHECK(norm(sub(mv, lv)) <= 1e-7 * std::max(1.0, m.max_abs()));
      for (int j = 0; j <= k; ++j) {
        const double ip = dot(v, eig.vectors.column(j));
        CHECK(std::fabs(ip - (j == k ? 1.0 : 0.0)) <= 1e-8);
      }
    }
    // reconstruction
    Matrix lambda(d, d);
    for (int i = 0; i < d; ++i) lambda(i, i) = eig.values[i];
    const Matrix recon = eig.vectors * lambda * eig.vectors.transpose();
    CHECK((recon - m).max_abs() <= 1e-6 * std::max(1.0, m.max_abs()));
  }
}

TEST_CASE("sym_eigen: rejects non-square input") {
  CHECK_THROWS_AS(sym_eigen(Matrix(2, 3), tol), std::invalid_argument);
}

TEST_CASE("min_eig_sym: known values") {
  CHECK(min_eig_sym(Matrix::identity(2), tol) == doctest::Approx(1.0));
  CHECK(min_eig_sym(Matrix(3, 3), tol) == doctest::Approx(0.0));
  // symmetric part of [[0,1],[0,0]] has eigenvalues ±1/2
  CHECK(min_eig_sym(Matrix::from_rows({{0, 1}, {0, 0}}), tol) == doctest::Approx(-0.5));
}

TEST_CASE("kernel_basis: identity, known kernel, zero matrix") {
  CHECK(kernel_basis(Matrix::identity(3), tol).dim() == 0);

  const Subspace k = kernel_basis(symmetric_part(example_3x3()), tol);
  REQUIRE(k.dim() == 1);
  const double s = std::sqrt(2.0);
  const Vec expected = {-1.0 / s, 0.0, 1.0 / s};
  CHECK(std::fabs(std::fabs(dot(k.basis()[0], expected)) - 1.0) <= 1e-9);

  CHECK(kernel_basis(Matrix(2, 2), tol).dim() == 2);
}

TEST_CASE("kernel_basis: residuals on random rectangular matrices") {
  Rand rng(11);
  for (int t = 0; t < 60; ++t) {
    const Matrix m = random_matrix(rng.uniform_int(1, 7), rng.uniform_int(1, 7), rng);
    const Subspace k = kernel_basis(m, tol);
    for (const Vec& v : k.basis())
      CHECK(norm(m.apply(v)) <= 1e-6 * std::max(1.0, m.max_abs()));
  }
}

TEST_CASE("kernel_basis: rank-deficient products have the right dimension") {
  // 3x2 times 2x3 has rank at most 2.
  Rand rng(13);
  const Matrix a = random_matrix(3, 2, rng);
  const Matrix b = random_matrix(2, 3, rng);
  CHECK(kernel_basis(a * b, tol).dim() == 1);
}

TEST_CASE("is_psd: verdicts and witness") {
  CHECK(is_psd(Matrix::identity(2), tol).psd);
  CHECK(is_psd(Matrix(3, 3), tol).psd);

  const PsdResult r = is_psd(Matrix::from_rows({{1, 2}, {2, 1}}), tol);
  REQUIRE_FALSE(r.psd);
  CHECK(r.min_eigenvalue == doctest::Approx(-1.0));
  const double s = std::sqrt(2.0);
  CHECK(std::fabs(std::fabs(dot(r.witness, {1.0 / s, -1.0 / s})) - 1.0) <= 1e-9);
  // wᵀMw < 0 by direct evaluation
  const Matrix m = Matrix::from_rows({{1, 2}, {2, 1}});
  CHECK(dot(r.witness, m.apply(r.witness)) < 0.0);
}

TEST_CASE("is_psd agrees with its symmetrization") {
  Rand rng(17);
  for (int t = 0; t < 200; ++t) {
    const int d = rng.uniform_int(1, 6);
    const Matrix m = random_matrix(d, d, rng, 2.0);
    CHECK(is_psd(m, tol).psd == is_psd(m.symmetrized(), tol).psd);
  }
}
