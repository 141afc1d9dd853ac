#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gmat/reference_dense.hpp"
#include "gmat/spectral_core.hpp"
#include "test_support.hpp"

using namespace gmat;

TEST_SUITE("reference_dense") {

TEST_CASE("circulant rows shift right") {
  const DenseMatrix C = circulant(std::vector<double>{10, 11, 12, 13});
  CHECK(C.at(0, 0) == 10);
  CHECK(C.at(0, 3) == 13);
  CHECK(C.at(1, 0) == 13);  // previous row shifted one place right
  CHECK(C.at(1, 1) == 10);
  CHECK(C.at(3, 0) == 11);
}

TEST_CASE("reverse circulant rows shift left and the matrix is symmetric") {
  const DenseMatrix B = reverse_circulant(std::vector<double>{10, 11, 12, 13});
  CHECK(B.at(1, 0) == 11);  // previous row shifted one place left
  CHECK(B.at(1, 3) == 10);
  std::mt19937_64 rng(31);
  const DenseMatrix R = reverse_circulant(testsup::random_vector(rng, 9));
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) CHECK(R.at(i, j) == R.at(j, i));
  }
}

TEST_CASE("circulant of the unit row is the identity") {
  const DenseMatrix C = circulant(std::vector<double>{1, 0, 0, 0, 0});
  CHECK(max_abs_difference(C, DenseMatrix::identity(5)) == 0.0);
}

TEST_CASE("dense transforms") {
  const std::vector<double> e0 = {1, 0, 0, 0};
  const std::vector<double> y = dense_idsct(e0);
  CHECK(y[0] == doctest::Approx(0.5));
  CHECK(y[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(y[2] == doctest::Approx(0.5));
  CHECK(y[3] == doctest::Approx(0.0));

  std::mt19937_64 rng(32);
  for (int n : {4, 5, 12}) {  // odd and non-power-of-two orders included
    const std::vector<double> x = testsup::random_vector(rng, n);
    const std::vector<double> rt = dense_dsct(dense_idsct(x));
    CHECK(testsup::max_abs_diff(rt, x) <= 1e-12 * std::max(1.0, testsup::sup_norm(x)));
  }
}

TEST_CASE("basis column norms at general orders") {
  for (int n = 2; n <= 64; ++n) {
    const BasisVectorSet q = build_q_dense(n);
    for (int j = 0; j < n; ++j) {
      CHECK(testsup::norm2(q.column(j)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("eigensolver on a diagonal matrix") {
  DenseMatrix A(4);
  A.at(0, 0) = 3;
  A.at(1, 1) = -1;
  A.at(2, 2) = 7;
  A.at(3, 3) = 0.5;
  const std::vector<double> ev = dense_eigensolve_symmetric(A);
  CHECK(ev == std::vector<double>{-1, 0.5, 3, 7});
}

TEST_CASE("eigensolver on a symmetric circulant") {
  const std::vector<double> ev =
      dense_eigensolve_symmetric(circulant(std::vector<double>{2, 1, 0, 1}));
  CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(2.0));
  CHECK(ev[3] == doctest::Approx(4.0));
}

TEST_CASE("eigensolver against the tridiagonal closed form") {
  // first column (2, 1, 0, ...) has eigenvalues 2 + 2 cos(k pi / (n+1))
  const int n = 64;
  DenseMatrix A(n);
  for (int i = 0; i < n; ++i) {
    A.at(i, i) = 2.0;
    if (i + 1 < n) A.at(i, i + 1) = A.at(i + 1, i) = 1.0;
  }
  const std::vector<double> ev = dense_eigensolve_symmetric(A);
  for (int k = 1; k <= n; ++k) {
    const double expect = 2.0 + 2.0 * std::cos(std::numbers::pi * k / (n + 1));
    CHECK(ev[static_cast<std::size_t>(n - k)] == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("eigensolver invariants on random symmetric matrices") {
  std::mt19937_64 rng(33);
  for (int n : {3, 16, 40}) {
    DenseMatrix A(n);
    double trace = 0.0, fro2 = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        const double v = std::uniform_real_distribution<double>(-1, 1)(rng);
        A.at(i, j) = A.at(j, i) = v;
      }
    }
    for (int i = 0; i < n; ++i) trace += A.at(i, i);
    for (double v : A.a) fro2 += v * v;
    const std::vector<double> ev = dense_eigensolve_symmetric(A);
    double sum = 0.0, sq = 0.0;
    for (double l : ev) {
      sum += l;
      sq += l * l;
    }
    CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
    CHECK(sq == doctest::Approx(fro2).epsilon(1e-9));
  }
}

TEST_CASE("eigensolver rejects asymmetric input") {
  DenseMatrix A(3);
  A.at(0, 1) = 1.0;
  CHECK_THROWS_AS(dense_eigensolve_symmetric(A), StructureError);
}

TEST_CASE("dense solve round trip") {
  std::mt19937_64 rng(34);
  const int n = 12;
  DenseMatrix A(n);
  for (double& v : A.a) v = std::uniform_real_distribution<double>(-1, 1)(rng);
  for (int i = 0; i < n; ++i) A.at(i, i) += 4.0;  // keep it comfortably nonsingular
  const std::vector<double> x_true = testsup::random_vector(rng, n);
  const std::vector<double> b = dense_matvec(A, x_true);
  const std::vector<double> x = dense_solve(A, b);
  CHECK(testsup::max_abs_diff(x, x_true) <= 1e-10);
}

TEST_CASE("dense matmul cross-check") {
  std::mt19937_64 rng(35);
  const DenseMatrix A = circulant(testsup::random_vector(rng, 6));
  const DenseMatrix I = DenseMatrix::identity(6);
  CHECK(max_abs_difference(dense_matmul(A, I), A) == 0.0);
}

}  // TEST_SUITE
