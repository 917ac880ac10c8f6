#include "crossn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "crossn/error.hpp"

namespace crossn {
namespace {

bool finite(const Scalar& z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) raise(ErrorKind::InvalidDimension, "matrix dimensions must be >= 1");
  data_.assign(rows * cols, Scalar{});
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) raise(ErrorKind::InvalidDimension, "matrix dimensions must be >= 1");
  if (data_.size() != rows * cols)
    raise(ErrorKind::Dimension, "matrix data has " + std::to_string(data_.size()) +
                                    " entries, expected " + std::to_string(rows * cols));
  if (!std::all_of(data_.begin(), data_.end(), finite))
    raise(ErrorKind::Numeric, "matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  if (!std::all_of(diag.begin(), diag.end(), finite))
    raise(ErrorKind::Numeric, "matrix entries must be finite");
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Scalar> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) raise(ErrorKind::Dimension, "ragged row list");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) raise(ErrorKind::InvalidDimension, "at least one vector is required");
  const std::size_t n = columns.front().size();
  for (const auto& col : columns) {
    if (col.size() != n)
      raise(ErrorKind::Dimension, "vectors have mixed dimensions (" + std::to_string(n) +
                                      " and " + std::to_string(col.size()) + ")");
  }
  std::vector<Scalar> data(n * columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) data[i * columns.size() + j] = columns[j][i];
  return Matrix(n, columns.size(), std::move(data));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void Matrix::swap_cols(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    raise(ErrorKind::Dimension, "matmul inner dimension mismatch: " + shape(a) + " * " + shape(b));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == Scalar{}) continue;
      kernels::axpy(aik, b.row(k), out);
    }
  }
  return c;
}

Matrix conjugate_transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

Matrix submatrix(const Matrix& a, const Combination& row_sel, const Combination& col_sel) {
  row_sel.require_fits(static_cast<int>(a.rows()));
  col_sel.require_fits(static_cast<int>(a.cols()));
  const auto r = static_cast<std::size_t>(row_sel.size());
  const auto c = static_cast<std::size_t>(col_sel.size());
  Matrix s(r, c);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < c; ++q)
      s(p, q) = a(static_cast<std::size_t>(row_sel[static_cast<int>(p)] - 1),
                  static_cast<std::size_t>(col_sel[static_cast<int>(q)] - 1));
  return s;
}

Scalar determinant(const Matrix& a) {
  if (!a.square()) raise(ErrorKind::Dimension, "determinant of non-square " + shape(a));
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(1, 0) * a(0, 1);

  Matrix w = a;
  Scalar det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(w(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(w(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) return Scalar{};
    if (pivot != k) {
      w.swap_rows(pivot, k);
      det = -det;
    }
    const Scalar p = w(k, k);
    det *= p;
    const std::size_t tail = n - k - 1;
    if (tail == 0) break;
    const auto pivot_row = w.row(k).subspan(k + 1, tail);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar factor = w(i, k) / p;
      if (factor == Scalar{}) continue;
      kernels::axpy(-factor, pivot_row, w.row(i).subspan(k + 1, tail));
    }
  }
  return det;
}

double max_norm(const Matrix& a) {
  double m = 0.0;
  for (const auto& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (!a.square()) return false;
  double gap = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      gap = std::max(gap, std::abs(a(i, j) - std::conj(a(j, i))));
  return gap <= tol * (1.0 + max_norm(a));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    raise(ErrorKind::Dimension, "comparing " + shape(a) + " with " + shape(b));
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace crossn
