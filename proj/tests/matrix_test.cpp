#include <doctest.h>

#include "qht/channels.hpp"
#include "qht/matrix.hpp"
#include "test_util.hpp"

using namespace qht;

TEST_CASE("kron of identities") {
  CHECK(max_abs_diff(kron(Matrix::identity(3), Matrix::identity(3)), Matrix::identity(9)) == 0.0);
}

TEST_CASE("kron projector block structure") {
  Matrix p00(3, 3);
  p00(0, 0) = 1.0;
  const Matrix k = kron(p00, Matrix::identity(3));
  Matrix expect(9, 9);
  for (std::size_t i = 0; i < 3; ++i) expect(i, i) = 1.0;
  CHECK(max_abs_diff(k, expect) == 0.0);
}

TEST_CASE("kron of Weyl operators matches the index formula") {
  // oracle: (A (x) B)[3i+k, 3j+l] = A[i,j] * B[k,l]
  const Matrix a = weyl({0, 1});
  const Matrix b = weyl({1, 0});
  const Matrix k = kron(a, b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
          CHECK(std::abs(k(3 * i + r, 3 * j + c) - a(i, j) * b(r, c)) == 0.0);
}

TEST_CASE("kron associativity on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = test::random_matrix(rng, 3, 3);
    const Matrix b = test::random_matrix(rng, 3, 3);
    const Matrix c = test::random_matrix(rng, 3, 3);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-13);
  }
}

TEST_CASE("kron refuses dimensions past the limit") {
  const Matrix m81 = kron(kron(Matrix::identity(27), Matrix::identity(3)), Matrix::identity(1));
  const Matrix m6561 = kron(m81, m81);
  CHECK(m6561.rows() == 6561);
  CHECK_THROWS_AS(kron(m6561, Matrix::identity(3)), DimensionError);
}

TEST_CASE("dagger basics") {
  CHECK(max_abs_diff(dagger(Matrix::identity(3)), Matrix::identity(3)) == 0.0);

  const Matrix w11 = weyl({1, 1});
  CHECK(max_abs_diff(dagger(w11) * w11, Matrix::identity(3)) < 1e-14);

  std::mt19937_64 rng(7);
  const Matrix a = test::random_matrix(rng, 9, 9);
  CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);
}

TEST_CASE("trace") {
  CHECK(trace(Matrix::identity(27)).real() == doctest::Approx(27.0));
  CHECK(std::abs(trace(weyl({1, 0}))) < 1e-15);  // 1 + w + w^2 = 0
  CHECK_THROWS_AS(trace(Matrix(2, 3)), ShapeError);
}

TEST_CASE("trace cyclicity on random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = test::random_matrix(rng, 9, 9);
    const Matrix b = test::random_matrix(rng, 9, 9);
    CHECK(std::abs(trace(a * b) - trace(b * a)) < 1e-12);
  }
}

TEST_CASE("hermitian minimum eigenvalue") {
  Matrix d(3, 3);
  d(0, 0) = cplx(2.0, 0.0);
  d(1, 1) = cplx(-0.5, 0.0);
  d(2, 2) = cplx(1.0, 0.0);
  CHECK(min_eigenvalue_hermitian(d) == doctest::Approx(-0.5).epsilon(1e-12));

  // 2x2 with known spectrum: [[1, i], [-i, 1]] has eigenvalues 0 and 2
  Matrix h(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = 1.0;
  h(0, 1) = cplx(0.0, 1.0);
  h(1, 0) = cplx(0.0, -1.0);
  CHECK(std::abs(min_eigenvalue_hermitian(h)) < 1e-12);

  std::mt19937_64 rng(3);
  const Matrix rho = test::random_density(rng, 9);
  CHECK(min_eigenvalue_hermitian(rho) > -1e-12);
}
