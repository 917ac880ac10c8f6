#include <doctest.h>

#include <limits>

#include "crossn/error.hpp"
#include "crossn/matrix.hpp"
#include "crossn/oracles.hpp"
#include "support.hpp"

using namespace crossn;
using crossn::testing::all_close;
using crossn::testing::close;

namespace {

constexpr Scalar I{0.0, 1.0};

struct ScopedIsa {
  kernels::Isa saved = kernels::active().isa;
  ~ScopedIsa() { kernels::select(saved); }
};

}  // namespace

TEST_SUITE("matrix_core") {

TEST_CASE("construction validates shape and finiteness") {
  CHECK_THROWS_AS(Matrix(0, 2), Error);
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), Error);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    Matrix(1, 2, {1.0, Scalar(nan, 0.0)});
    FAIL("accepted NaN");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Numeric);
  }
  CHECK_THROWS_AS(Matrix::from_rows({{1.0, 2.0}, {3.0}}), Error);
}

TEST_CASE("matmul examples") {
  CHECK(matmul(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(2));
  const auto a = Matrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  const auto b = Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
  CHECK(matmul(a, b) == Matrix::from_rows({{2, 1}, {1, 2}}));
  const auto r = Matrix::from_rows({{0, -1}, {1, 0}});
  CHECK(matmul(r, r) == Matrix::from_rows({{-1, 0}, {0, -1}}));
  try {
    matmul(a, a);
    FAIL("accepted mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Dimension);
  }
}

TEST_CASE("conjugate_transpose examples") {
  CHECK(conjugate_transpose(Matrix::from_rows({{1, 2}, {3, 4}})) ==
        Matrix::from_rows({{1, 3}, {2, 4}}));
  CHECK(conjugate_transpose(Matrix::from_rows({{I}})) == Matrix::from_rows({{-I}}));
  CHECK(conjugate_transpose(Matrix::from_rows({{1.0 + I, 2}, {0, 3.0 - I}})) ==
        Matrix::from_rows({{1.0 - I, 0}, {2, 3.0 + I}}));
}

TEST_CASE("submatrix examples") {
  CHECK(submatrix(Matrix::identity(3), {1, 2}, {1, 2}) == Matrix::identity(2));
  const auto a = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(submatrix(a, {1, 2}, {1, 3}) == Matrix::from_rows({{1, 3}, {4, 6}}));
  CHECK(submatrix(a, {2}, {2}) == Matrix::from_rows({{5}}));
  try {
    submatrix(a, {1, 3}, {1});
    FAIL("accepted bad index");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidIndex);
  }
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Matrix::from_rows({{1, 2}, {3, 4}})) == Scalar(-2.0));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(close(determinant(Matrix::identity(n)), 1.0, 1e-15));
  CHECK(std::abs(determinant(Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}))) < 1e-12);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), Error);
}

TEST_CASE("determinant agrees with the permutation-sum oracle") {
  oracles::Rng rng(17);
  for (int trial = 0; trial < 600; ++trial) {
    const auto n = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 7));
    const bool cx = trial % 2 == 1;
    const Matrix a = oracles::random_matrix(rng, n, n, cx);
    REQUIRE(close(determinant(a), oracles::det_naive(a), 1e-9));
  }
}

TEST_CASE("determinant is multiplicative and flips sign under a row swap") {
  oracles::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(oracles::uniform_int(rng, 2, 7));
    const bool cx = trial % 3 == 0;
    const Matrix a = oracles::random_matrix(rng, n, n, cx);
    const Matrix b = oracles::random_matrix(rng, n, n, cx);
    const Scalar da = determinant(a);
    const Scalar db = determinant(b);
    REQUIRE(close(determinant(matmul(a, b)), da * db, 1e-9));
    Matrix s = a;
    s.swap_rows(0, n - 1);
    REQUIRE(close(determinant(s), -da, 1e-12));
  }
}

TEST_CASE("conjugate transpose is an involution and reverses products") {
  oracles::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 6));
    const auto k = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 6));
    const auto c = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 6));
    const Matrix a = oracles::random_matrix(rng, r, k, true);
    const Matrix b = oracles::random_matrix(rng, k, c, true);
    REQUIRE(conjugate_transpose(conjugate_transpose(a)) == a);
    REQUIRE(all_close(conjugate_transpose(matmul(a, b)),
                      matmul(conjugate_transpose(b), conjugate_transpose(a)), 1e-14));
  }
}

TEST_CASE("determinant is the same under every kernel table") {
  ScopedIsa guard;
  oracles::Rng rng(99);
  const Matrix a = oracles::random_matrix(rng, 7, 7, true);
  kernels::select(kernels::Isa::Scalar);
  const Scalar ref = determinant(a);
  for (const auto* t : kernels::available()) {
    kernels::select(t->isa);
    CHECK(close(determinant(a), ref, 1e-13));
  }
}

TEST_CASE("is_hermitian examples") {
  CHECK(is_hermitian(Matrix::identity(3), 1e-9));
  CHECK_FALSE(is_hermitian(Matrix::from_rows({{0, 1}, {-1, 0}}), 1e-9));
  CHECK(is_hermitian(Matrix::from_rows({{2, 1.0 - I}, {1.0 + I, 3}}), 1e-9));
  CHECK_FALSE(is_hermitian(Matrix(2, 3), 1e-9));
}

}  // TEST_SUITE
