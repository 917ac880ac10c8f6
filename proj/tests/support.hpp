#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "crossn/matrix.hpp"
#include "crossn/oracles.hpp"

namespace crossn::testing {

inline bool close(Scalar a, Scalar b, double rel, double abs_floor = 1.0) {
  return std::abs(a - b) <= rel * std::max(abs_floor, std::max(std::abs(a), std::abs(b)));
}

inline bool close(double a, double b, double rel, double abs_floor = 1.0) {
  return std::abs(a - b) <= rel * std::max(abs_floor, std::max(std::abs(a), std::abs(b)));
}

inline bool all_close(const Matrix& a, const Matrix& b, double rel) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max({1.0, max_norm(a), max_norm(b)});
  return max_abs_diff(a, b) <= rel * scale;
}

inline std::vector<Vector> columns_of(const Matrix& x) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < x.cols(); ++j) cols.push_back(x.column(j));
  return cols;
}

}  // namespace crossn::testing
