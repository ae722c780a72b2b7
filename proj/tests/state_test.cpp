#include <doctest.h>

#include "qht/state.hpp"
#include "qht/teleport.hpp"
#include "test_util.hpp"

using namespace qht;

namespace {

DensityMatrix random_state(std::mt19937_64& rng, std::vector<std::string> labels) {
  const std::size_t dim = labels.size() == 1 ? 3 : labels.size() == 2 ? 9 : 27;
  return DensityMatrix(std::move(labels), test::random_density(rng, dim));
}

/// Brute-force partial trace over the trailing registers by direct index
/// summation; independent of the library implementation.
Matrix trace_out_tail(const Matrix& rho, std::size_t keep_dim, std::size_t tail_dim) {
  Matrix out(keep_dim, keep_dim);
  for (std::size_t i = 0; i < keep_dim; ++i)
    for (std::size_t j = 0; j < keep_dim; ++j) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < tail_dim; ++t) s += rho(i * tail_dim + t, j * tail_dim + t);
      out(i, j) = s;
    }
  return out;
}

}  // namespace

TEST_CASE("pure state validation") {
  CHECK_THROWS_AS(PureState({"a"}, {cplx(1.0, 0.0), 0.0, 0.0, 0.0}), ShapeError);
  CHECK_THROWS_AS(PureState({"a"}, {cplx(0.5, 0.0), 0.0, 0.0}), NumericalError);
  CHECK_THROWS_AS(PureState({"a", "a"}, std::vector<cplx>(9, cplx(1.0 / 3.0, 0.0))), LabelError);
}

TEST_CASE("partial trace factorizes product states") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix a = random_state(rng, {"a"});
    const DensityMatrix b = random_state(rng, {"b"});
    const DensityMatrix ab = tensor(a, b);
    const DensityMatrix reduced = partial_trace(ab, {"b"});
    CHECK(max_abs_diff(reduced.matrix(), a.matrix()) < 1e-12);
    REQUIRE(reduced.labels() == std::vector<std::string>{"a"});
  }
}

TEST_CASE("partial trace of a maximally correlated state is maximally mixed") {
  const PureState& psi1 = measurement_states()[0];  // (|000> + |111> + |222>)/sqrt3
  const DensityMatrix rho = DensityMatrix::from_pure(psi1);
  const DensityMatrix first = partial_trace(rho, {"0", "1"});

  // brute-force oracle over raw indices
  const Matrix expect = trace_out_tail(rho.matrix(), 3, 9);
  CHECK(max_abs_diff(first.matrix(), expect) < 1e-14);
  CHECK(max_abs_diff(first.matrix(), Matrix::identity(3) * cplx(1.0 / 3.0, 0.0)) < 1e-12);
}

TEST_CASE("partial trace over interior registers matches the index-sum oracle") {
  std::mt19937_64 rng(57);
  const DensityMatrix rho = random_state(rng, {"x", "y", "z"});
  const DensityMatrix keep_outer = partial_trace(rho, {"y"});

  Matrix expect(9, 9);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t z = 0; z < 3; ++z)
      for (std::size_t xp = 0; xp < 3; ++xp)
        for (std::size_t zp = 0; zp < 3; ++zp) {
          cplx s = 0.0;
          for (std::size_t y = 0; y < 3; ++y)
            s += rho.matrix()(9 * x + 3 * y + z, 9 * xp + 3 * y + zp);
          expect(3 * x + z, 3 * xp + zp) = s;
        }
  CHECK(max_abs_diff(keep_outer.matrix(), expect) < 1e-14);
  REQUIRE(keep_outer.labels() == std::vector<std::string>{"x", "z"});
}

TEST_CASE("partial trace preserves trace and hermiticity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(rng, {"p", "q"});
    const DensityMatrix red = partial_trace(rho, {"q"});
    CHECK(std::abs(trace(red.matrix()) - trace(rho.matrix())) < 1e-12);
    CHECK(hermiticity_defect(red.matrix()) < 1e-12);
  }
}

TEST_CASE("partial trace label handling") {
  std::mt19937_64 rng(5);
  const DensityMatrix rho = random_state(rng, {"a", "b"});
  CHECK_THROWS_AS(partial_trace(rho, {"c"}), LabelError);
  const DensityMatrix same = partial_trace(rho, {});
  CHECK(max_abs_diff(same.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("fidelity primitives") {
  const PureState zero({"a"}, {cplx(1.0, 0.0), 0.0, 0.0});
  const PureState one({"a"}, {0.0, cplx(1.0, 0.0), 0.0});

  CHECK(fidelity_pure_mixed(zero, DensityMatrix::from_pure(zero)) == doctest::Approx(1.0));
  CHECK(fidelity_pure_mixed(zero, DensityMatrix::from_pure(one)) == doctest::Approx(0.0));

  const DensityMatrix mixed({"a"}, Matrix::identity(3) * cplx(1.0 / 3.0, 0.0));
  CHECK(fidelity_pure_mixed(zero, mixed) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(overlap_pure_mixed(zero, mixed) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("negative overlap raises a PSD violation") {
  Matrix bad(3, 3);
  bad(0, 0) = cplx(-0.5, 0.0);
  bad(1, 1) = cplx(0.75, 0.0);
  bad(2, 2) = cplx(0.75, 0.0);
  const DensityMatrix rho({"a"}, bad);  // Hermitian, unit trace, not PSD
  const PureState zero({"a"}, {cplx(1.0, 0.0), 0.0, 0.0});
  CHECK_THROWS_AS(overlap_pure_mixed(zero, rho), NumericalError);
  CHECK_FALSE(rho.is_psd());
}

TEST_CASE("density matrix validation") {
  Matrix m = Matrix::identity(3) * cplx(0.5, 0.0);
  CHECK_THROWS_AS(DensityMatrix({"a"}, m), NumericalError);          // trace 1.5
  CHECK_NOTHROW(DensityMatrix({"a"}, m, /*normalized=*/false));

  Matrix nh = Matrix::identity(3) * cplx(1.0 / 3.0, 0.0);
  nh(0, 1) = cplx(0.1, 0.0);
  CHECK_THROWS_AS(DensityMatrix({"a"}, nh), NumericalError);         // not Hermitian
}
