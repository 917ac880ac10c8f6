#include "crossn/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "crossn/combinatorics.hpp"
#include "crossn/compound.hpp"
#include "crossn/error.hpp"

namespace crossn::oracles {
namespace {

using Table = std::vector<std::vector<Scalar>>;

// a[rows[p]-1][cols[q]-1], read through the public accessor only.
Table select(const Matrix& a, std::span<const int> rows, std::span<const int> cols) {
  Table t(rows.size(), std::vector<Scalar>(cols.size()));
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = 0; q < cols.size(); ++q)
      t[p][q] = a(static_cast<std::size_t>(rows[p] - 1), static_cast<std::size_t>(cols[q] - 1));
  return t;
}

Scalar det_table(const Table& t) {
  const std::size_t n = t.size();
  if (n > static_cast<std::size_t>(kNaiveMaxDim))
    raise(ErrorKind::Capacity, "permutation-sum determinant capped at n=" +
                                   std::to_string(kNaiveMaxDim));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Scalar sum{};
  do {
    Scalar term = static_cast<double>(permutation_parity(std::span<const int>(perm)));
    for (std::size_t i = 0; i < n; ++i) term *= t[i][static_cast<std::size_t>(perm[i] - 1)];
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::vector<int> iota_list(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

Table naive_compound(const Matrix& a, int k) {
  const auto rl = enumerate_combinations(static_cast<int>(a.rows()), k);
  const auto cl = enumerate_combinations(static_cast<int>(a.cols()), k);
  Table t(rl.size(), std::vector<Scalar>(cl.size()));
  for (std::size_t i = 0; i < rl.size(); ++i)
    for (std::size_t j = 0; j < cl.size(); ++j)
      t[i][j] = det_table(select(a, rl[i].indices(), cl[j].indices()));
  return t;
}

Table naive_product(const Table& x, const Table& y) {
  Table out(x.size(), std::vector<Scalar>(y.front().size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.front().size(); ++j)
      for (std::size_t l = 0; l < y.size(); ++l) out[i][j] += x[i][l] * y[l][j];
  return out;
}

}  // namespace

Scalar det_naive(const Matrix& a) {
  if (!a.square()) raise(ErrorKind::Dimension, "determinant of a non-square matrix");
  const auto idx = iota_list(static_cast<int>(a.rows()));
  if (a.rows() > static_cast<std::size_t>(kNaiveMaxDim))
    raise(ErrorKind::Capacity, "permutation-sum determinant capped at n=" +
                                   std::to_string(kNaiveMaxDim));
  return det_table(select(a, idx, idx));
}

CrossVector cross_naive(std::span<const Vector> vectors) {
  if (vectors.empty()) raise(ErrorKind::InvalidDimension, "at least one vector is required");
  const int n = static_cast<int>(vectors.front().size());
  const int m = static_cast<int>(vectors.size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n) raise(ErrorKind::Dimension, "mixed vector dimensions");
  if (m > n) raise(ErrorKind::Dimension, "need m <= n");
  if (n > kNaiveMaxDim) raise(ErrorKind::Capacity, "cross_naive capped at n=9");
  std::vector<Scalar> values;
  for (const auto& rows : enumerate_combinations(n, m)) {
    Table t(static_cast<std::size_t>(m), std::vector<Scalar>(static_cast<std::size_t>(m)));
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        t[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
            vectors[static_cast<std::size_t>(q)][static_cast<std::size_t>(rows[p] - 1)];
    values.push_back(det_table(t));
  }
  return CrossVector(n, m, std::move(values));
}

Theorem1Report verify_theorem1(const Matrix& a, const Matrix& b, double tol) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    raise(ErrorKind::Dimension, "cauchy-binet check needs a (m x n) and b (n x m)");
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  const Scalar lhs = determinant(matmul(a, b));
  Scalar rhs{};
  if (m <= n) {
    const auto full = iota_list(m);
    for (const auto& s : enumerate_combinations(n, m))
      rhs += det_table(select(a, full, s.indices())) * det_table(select(b, s.indices(), full));
  }
  const double gap = std::abs(lhs - rhs);
  return {gap <= tol * (1.0 + std::abs(lhs)), lhs, rhs, gap};
}

Theorem2Report verify_theorem2(const Matrix& a, const Matrix& b, int k, double tol) {
  if (a.cols() != b.rows()) raise(ErrorKind::Dimension, "compound product check needs a.cols == b.rows");
  const int lim = static_cast<int>(std::min({a.rows(), a.cols(), b.cols()}));
  if (k < 1 || k > lim) raise(ErrorKind::Dimension, "compound order out of range");
  if (k > kNaiveMaxDim) raise(ErrorKind::Capacity, "compound product oracle capped at k=9");
  const auto lhs = compound_matrix(matmul(a, b), k).matrix;
  const Table rhs = naive_product(naive_compound(a, k), naive_compound(b, k));
  double worst = 0.0;
  for (std::size_t i = 0; i < rhs.size(); ++i)
    for (std::size_t j = 0; j < rhs[i].size(); ++j)
      worst = std::max(worst, std::abs(lhs(i, j) - rhs[i][j]) / (1.0 + std::abs(rhs[i][j])));
  return {worst <= tol, worst};
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) noexcept {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool complex) {
  std::vector<Scalar> data(rows * cols);
  for (auto& z : data) {
    const double re = uniform(rng);
    const double im = complex ? uniform(rng) : 0.0;
    z = {re, im};
  }
  return Matrix(rows, cols, std::move(data));
}

Matrix random_special_unitary(Rng& rng, std::size_t n, bool complex) {
  Matrix q = random_matrix(rng, n, n, complex);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < j; ++p) {
      Scalar proj{};
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, p)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, p);
    }
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) len += std::norm(q(i, j));
    len = std::sqrt(len);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= len;
  }
  // det(Q) has unit modulus; scaling column 0 by conj(det) makes it 1.
  const Scalar d = det_naive(q);
  const Scalar fix = complex ? std::conj(d) / std::abs(d) : Scalar(d.real() < 0 ? -1.0 : 1.0);
  for (std::size_t i = 0; i < n; ++i) q(i, 0) *= fix;
  return q;
}

Matrix random_hermitian(Rng& rng, std::size_t n, bool complex, bool indefinite,
                        double perturbation) {
  Matrix p = random_matrix(rng, n, n, complex);
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * perturbation * (p(i, j) + std::conj(p(j, i)));
    const double sign = indefinite && uniform(rng) < 0.0 ? -1.0 : 1.0;
    h(i, i) = Scalar(h(i, i).real() + sign, 0.0);
  }
  return h;
}

VerifyReport run_verification(const VerifyOptions& opts) {
  if (opts.trials < 1) raise(ErrorKind::InvalidDimension, "at least one trial is required");
  if (opts.max_dim < 1 || opts.max_dim > kNaiveMaxDim)
    raise(ErrorKind::InvalidDimension, "max dimension must lie in [1, " +
                                           std::to_string(kNaiveMaxDim) + "]");
  VerifyReport report;
  for (std::uint64_t t = 0; t < opts.trials; ++t) {
    const std::uint64_t seed = trial_seed(opts.seed, t);
    Rng rng(seed);
    const auto dim = [&] { return static_cast<std::size_t>(uniform_int(rng, 1, opts.max_dim)); };
    bool ok = true;
    double gap = 0.0;
    if (opts.theorem == Theorem::CauchyBinet) {
      const std::size_t m = dim();
      const std::size_t n = dim();
      const Matrix a = random_matrix(rng, m, n, opts.complex);
      const Matrix b = random_matrix(rng, n, m, opts.complex);
      const auto r = verify_theorem1(a, b, opts.tolerance);
      ok = r.passed;
      gap = r.gap / (1.0 + std::abs(r.lhs));
    } else {
      const std::size_t m = dim();
      const std::size_t n = dim();
      const std::size_t s = dim();
      const Matrix a = random_matrix(rng, m, n, opts.complex);
      const Matrix b = random_matrix(rng, n, s, opts.complex);
      const int kmax = static_cast<int>(std::min({m, n, s}));
      for (int k = 1; k <= kmax; ++k) {
        const auto r = verify_theorem2(a, b, k, opts.tolerance);
        ok = ok && r.passed;
        gap = std::max(gap, r.max_gap);
      }
    }
    ++report.trials;
    if (gap > report.worst_gap || t == 0) {
      report.worst_gap = gap;
      report.worst_seed = seed;
    }
    if (!ok) {
      ++report.failures;
      if (!report.has_failure) {
        report.has_failure = true;
        report.first_failing_seed = seed;
      }
    }
  }
  return report;
}

}  // namespace crossn::oracles
