#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "crossn/combinatorics.hpp"
#include "crossn/kernels.hpp"

namespace crossn {

using Vector = std::vector<Scalar>;

/// Dense row-major complex matrix. Real data is stored with zero imaginary
/// parts. Dimensions are at least 1x1 and every entry is finite when the
/// matrix is built from external data.
class Matrix {
 public:
  /// rows x cols of zeros.
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major data; rejects NaN/Inf and size mismatch.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> diag);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  /// Packs vectors as columns: X = (X1 X2 ... Xm).
  static Matrix from_columns(std::span<const Vector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<Scalar> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  Vector column(std::size_t j) const;

  std::span<const Scalar> data() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void swap_cols(std::size_t a, std::size_t b) noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);

Matrix conjugate_transpose(const Matrix& a);

/// result(p, q) = a(row_sel[p], col_sel[q]) with 1-based selections.
Matrix submatrix(const Matrix& a, const Combination& row_sel, const Combination& col_sel);

/// Row-pivoted elimination (largest-modulus pivot) over complex scalars.
/// Singular input yields its computed near-zero value, not an error.
Scalar determinant(const Matrix& a);

/// Largest entry modulus.
double max_norm(const Matrix& a);

/// Square and max|a - a^H| <= tol * (1 + max|a|).
bool is_hermitian(const Matrix& a, double tol);

/// Entrywise max |a - b|; dimensions must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace crossn
