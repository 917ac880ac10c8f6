#include <doctest.h>

#include "crossn/compound.hpp"
#include "crossn/error.hpp"
#include "crossn/oracles.hpp"
#include "support.hpp"

using namespace crossn;
using crossn::testing::all_close;
using crossn::testing::close;

TEST_SUITE("compound") {

TEST_CASE("minor examples") {
  CHECK(minor(Matrix::identity(3), {1, 2}, {1, 2}) == Scalar(1.0));
  const auto a = Matrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  // det [[0,1],[1,1]] = 0*1 - 1*1
  CHECK(minor(a, {1, 2}, {2, 3}) == Scalar(-1.0));
  oracles::Rng rng(1);
  const Matrix r = oracles::random_matrix(rng, 3, 4, true);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j)
      CHECK(minor(r, Combination{i}, Combination{j}) ==
            r(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
  try {
    minor(a, {1, 2}, {1});
    FAIL("accepted unequal selections");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Dimension);
  }
}

TEST_CASE("row_minor_vector examples") {
  const auto e12 = row_minor_vector(Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
  REQUIRE(e12.size() == 3);
  CHECK(e12[0].label == Combination{1, 2});
  CHECK(e12[0].value == Scalar(1.0));
  CHECK(e12[1].value == Scalar(0.0));
  CHECK(e12[2].value == Scalar(0.0));

  const auto v = row_minor_vector(Matrix::from_rows({{1, 4}, {2, 5}, {3, 6}}));
  CHECK(v[0].label == Combination{1, 2});
  CHECK(v[1].label == Combination{1, 3});
  CHECK(v[2].label == Combination{2, 3});
  CHECK(close(v[0].value, -3.0, 1e-14));
  CHECK(close(v[1].value, -6.0, 1e-14));
  CHECK(close(v[2].value, -3.0, 1e-14));

  oracles::Rng rng(4);
  const Matrix sq = oracles::random_matrix(rng, 5, 5, true);
  const auto full = row_minor_vector(sq);
  REQUIRE(full.size() == 1);
  CHECK(full[0].label == Combination{1, 2, 3, 4, 5});
  CHECK(close(full[0].value, determinant(sq), 1e-15));

  try {
    row_minor_vector(Matrix(2, 3));
    FAIL("accepted m > n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Dimension);
  }
}

TEST_CASE("compound_matrix examples") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      const auto c = compound_matrix(Matrix::identity(n), k);
      CHECK(c.matrix == Matrix::identity(static_cast<std::size_t>(binomial(static_cast<int>(n), k))));
    }
  oracles::Rng rng(6);
  const Matrix a = oracles::random_matrix(rng, 3, 4, true);
  CHECK(compound_matrix(a, 1).matrix == a);

  const auto c = compound_matrix(Matrix::from_rows({{1, 0, 1}, {0, 1, 1}}), 2);
  CHECK(c.matrix == Matrix::from_rows({{1, 1, -1}}));
  CHECK(c.row_labels == std::vector<Combination>{{1, 2}});
  CHECK(c.col_labels == std::vector<Combination>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(c.source_rows == 2);
  CHECK(c.source_cols == 3);

  CHECK_THROWS_AS(compound_matrix(a, 0), Error);
  CHECK_THROWS_AS(compound_matrix(a, 4), Error);
}

TEST_CASE("compound_matrix enforces capacity caps") {
  try {
    compound_matrix(Matrix::identity(21), 2);
    FAIL("exceeded dimension cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Capacity);
  }
  CompoundLimits tight;
  tight.max_entries = 10;
  CHECK_THROWS_AS(compound_matrix(Matrix::identity(5), 2, tight), Error);
  tight.max_dim = 4;
  CHECK_THROWS_AS(compound_matrix(Matrix::identity(5), 1, tight), Error);
}

TEST_CASE("cauchy_binet examples") {
  const auto a = Matrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  const auto s = cauchy_binet(a, conjugate_transpose(a));
  CHECK(close(s.lhs, 3.0, 1e-14));
  CHECK(close(s.rhs, 3.0, 1e-14));

  oracles::Rng rng(12);
  const Matrix tall = oracles::random_matrix(rng, 3, 2, false);
  const Matrix wide = oracles::random_matrix(rng, 2, 3, false);
  const auto z = cauchy_binet(tall, wide);
  CHECK(z.rhs == Scalar{});
  CHECK(std::abs(z.lhs) < 1e-12);

  const auto id = cauchy_binet(Matrix::identity(2), Matrix::identity(2));
  CHECK(id.lhs == Scalar(1.0));
  CHECK(id.rhs == Scalar(1.0));

  CHECK_THROWS_AS(cauchy_binet(a, a), Error);
}

TEST_CASE("Cauchy-Binet holds on random real and complex pairs") {
  oracles::Rng rng(100);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 7));
    const auto n = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 7));
    const bool cx = trial % 2 == 0;
    const auto s = cauchy_binet(oracles::random_matrix(rng, m, n, cx),
                                oracles::random_matrix(rng, n, m, cx));
    REQUIRE(std::abs(s.lhs - s.rhs) <= 1e-8 * (1.0 + std::abs(s.lhs)));
  }
}

TEST_CASE("compound of a product is the product of compounds") {
  oracles::Rng rng(200);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 6));
    const auto n = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 6));
    const auto s = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 6));
    const bool cx = trial % 2 == 1;
    const Matrix a = oracles::random_matrix(rng, m, n, cx);
    const Matrix b = oracles::random_matrix(rng, n, s, cx);
    const int kmax = static_cast<int>(std::min({m, n, s}));
    for (int k = 1; k <= kmax; ++k) {
      const auto lhs = compound_matrix(matmul(a, b), k).matrix;
      const auto rhs = matmul(compound_matrix(a, k).matrix, compound_matrix(b, k).matrix);
      REQUIRE(all_close(lhs, rhs, 1e-8));
    }
  }
}

TEST_CASE("compound commutes with conjugate transpose") {
  oracles::Rng rng(300);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 5));
    const auto c = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 5));
    const Matrix a = oracles::random_matrix(rng, r, c, true);
    for (int k = 1; k <= static_cast<int>(std::min(r, c)); ++k)
      REQUIRE(all_close(compound_matrix(conjugate_transpose(a), k).matrix,
                        conjugate_transpose(compound_matrix(a, k).matrix), 1e-13));
  }
}

TEST_CASE("row_minor_vector is the {1..m} column of the order-m compound") {
  oracles::Rng rng(400);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(oracles::uniform_int(rng, 1, 6));
    const auto m = static_cast<std::size_t>(oracles::uniform_int(rng, 1, static_cast<int>(n)));
    const Matrix x = oracles::random_matrix(rng, n, m, trial % 2 == 0);
    const auto v = row_minor_vector(x);
    const auto c = compound_matrix(x, static_cast<int>(m));
    REQUIRE(c.matrix.cols() == 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      REQUIRE(v[i].label == c.row_labels[i]);
      REQUIRE(v[i].value == c.matrix(i, 0));
    }
  }
}

TEST_CASE("row_minor_vector is antisymmetric and multilinear in the columns") {
  oracles::Rng rng(500);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(oracles::uniform_int(rng, 2, 7));
    const auto m = static_cast<std::size_t>(oracles::uniform_int(rng, 2, static_cast<int>(n)));
    const bool cx = trial % 2 == 0;
    const Matrix x = oracles::random_matrix(rng, n, m, cx);
    const auto v = row_minor_vector(x);

    Matrix swapped = x;
    const auto p = static_cast<std::size_t>(oracles::uniform_int(rng, 0, static_cast<int>(m) - 1));
    const auto q = (p + 1) % m;
    swapped.swap_cols(p, q);
    const auto w = row_minor_vector(swapped);
    for (std::size_t i = 0; i < v.size(); ++i) REQUIRE(close(w[i].value, -v[i].value, 1e-12));

    // column p -> alpha*u + beta*y
    const Matrix uv = oracles::random_matrix(rng, n, 2, cx);
    const Scalar alpha{oracles::uniform(rng), cx ? oracles::uniform(rng) : 0.0};
    const Scalar beta{oracles::uniform(rng), cx ? oracles::uniform(rng) : 0.0};
    Matrix xu = x, xy = x, xc = x;
    for (std::size_t i = 0; i < n; ++i) {
      xu(i, p) = uv(i, 0);
      xy(i, p) = uv(i, 1);
      xc(i, p) = alpha * uv(i, 0) + beta * uv(i, 1);
    }
    const auto cu = row_minor_vector(xu);
    const auto cy = row_minor_vector(xy);
    const auto cc = row_minor_vector(xc);
    for (std::size_t i = 0; i < cc.size(); ++i)
      REQUIRE(close(cc[i].value, alpha * cu[i].value + beta * cy[i].value, 1e-11));
  }
}

TEST_CASE("row_minor_vector vanishes on dependent columns") {
  oracles::Rng rng(600);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(oracles::uniform_int(rng, 2, 7));
    const auto m = static_cast<std::size_t>(oracles::uniform_int(rng, 2, static_cast<int>(n)));
    const auto r = static_cast<std::size_t>(oracles::uniform_int(rng, 1, static_cast<int>(m) - 1));
    const bool cx = trial % 2 == 0;
    const Matrix gens = oracles::random_matrix(rng, n, r, cx);
    const Matrix coeff = oracles::random_matrix(rng, r, m, cx);
    Matrix x = matmul(gens, coeff);
    // unit-scale the columns
    for (std::size_t j = 0; j < m; ++j) {
      const double len = std::sqrt(kernels::norm_sq(x.column(j)));
      for (std::size_t i = 0; i < n; ++i) x(i, j) /= len;
    }
    for (const auto& c : row_minor_vector(x).components()) REQUIRE(std::abs(c.value) <= 1e-9);
  }
}

}  // TEST_SUITE
