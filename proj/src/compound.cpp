#include "crossn/compound.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crossn/error.hpp"

namespace crossn {

CrossVector::CrossVector(int n, int m, std::vector<Scalar> values) : n_(n), m_(m) {
  auto labels = enumerate_combinations(n, m);
  if (labels.size() != values.size())
    raise(ErrorKind::Dimension, "cross vector needs " + std::to_string(labels.size()) +
                                    " components, got " + std::to_string(values.size()));
  components_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    components_.push_back({std::move(labels[i]), values[i]});
}

std::optional<Scalar> CrossVector::at(const Combination& label) const {
  if (label.size() != m_ || !label.fits(n_)) return std::nullopt;
  return components_[static_cast<std::size_t>(rank_combination(label, n_))].value;
}

Vector CrossVector::values() const {
  Vector v;
  v.reserve(components_.size());
  for (const auto& c : components_) v.push_back(c.value);
  return v;
}

double CrossVector::norm_sq() const {
  const Vector v = values();
  return kernels::norm_sq(v);
}

double CrossVector::norm() const { return std::sqrt(norm_sq()); }

namespace {

void check_capacity(int rows, int cols, int k, const CompoundLimits& limits) {
  if (rows > limits.max_dim || cols > limits.max_dim)
    raise(ErrorKind::Capacity, "compound of a " + std::to_string(rows) + "x" +
                                   std::to_string(cols) + " matrix exceeds the dimension cap " +
                                   std::to_string(limits.max_dim));
  const std::uint64_t r = binomial(rows, k);
  const std::uint64_t c = binomial(cols, k);
  if (c != 0 && r > limits.max_entries / c)
    raise(ErrorKind::Capacity, "compound of order " + std::to_string(k) + " would hold " +
                                   std::to_string(r) + "x" + std::to_string(c) +
                                   " entries, above the cap " + std::to_string(limits.max_entries));
}

}  // namespace

Scalar minor(const Matrix& a, const Combination& row_sel, const Combination& col_sel) {
  if (row_sel.size() != col_sel.size())
    raise(ErrorKind::Dimension, "minor needs equal-size selections, got " + row_sel.to_string() +
                                    " and " + col_sel.to_string());
  return determinant(submatrix(a, row_sel, col_sel));
}

CrossVector row_minor_vector(const Matrix& x, const CompoundLimits& limits) {
  const int n = static_cast<int>(x.rows());
  const int m = static_cast<int>(x.cols());
  if (m > n)
    raise(ErrorKind::Dimension, "cross product of " + std::to_string(m) + " vectors in " +
                                    std::to_string(n) + " dimensions needs m <= n");
  if (n > kMaxDimension)
    raise(ErrorKind::Capacity, "dimension " + std::to_string(n) + " exceeds " +
                                   std::to_string(kMaxDimension));
  if (binomial(n, m) > limits.max_entries)
    raise(ErrorKind::Capacity, "C(" + std::to_string(n) + "," + std::to_string(m) +
                                   ") components exceed the cap " +
                                   std::to_string(limits.max_entries));
  const auto all_cols = Combination::leading(m);
  const auto labels = enumerate_combinations(n, m);
  std::vector<Scalar> values;
  values.reserve(labels.size());
  for (const auto& rows : labels) values.push_back(minor(x, rows, all_cols));
  return CrossVector(n, m, std::move(values));
}

CompoundMatrix compound_matrix(const Matrix& a, int k, const CompoundLimits& limits) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (k < 1 || k > std::min(rows, cols))
    raise(ErrorKind::Dimension, "compound order " + std::to_string(k) + " out of range for a " +
                                    std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  check_capacity(rows, cols, k, limits);
  auto row_labels = enumerate_combinations(rows, k);
  auto col_labels = enumerate_combinations(cols, k);
  Matrix out(row_labels.size(), col_labels.size());
  for (std::size_t i = 0; i < row_labels.size(); ++i)
    for (std::size_t j = 0; j < col_labels.size(); ++j)
      out(i, j) = minor(a, row_labels[i], col_labels[j]);
  return {k, rows, cols, std::move(out), std::move(row_labels), std::move(col_labels)};
}

CauchyBinetSides cauchy_binet(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    raise(ErrorKind::Dimension, "Cauchy-Binet needs a (m x n) and b (n x m), got " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " and " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  CauchyBinetSides sides{determinant(matmul(a, b)), Scalar{}};
  if (m > n) return sides;
  const auto full = Combination::leading(m);
  for (const auto& s : enumerate_combinations(n, m))
    sides.rhs += minor(a, full, s) * minor(b, s, full);
  return sides;
}

}  // namespace crossn
