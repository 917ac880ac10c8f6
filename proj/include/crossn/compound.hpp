#pragma once

#include <cstdint>
#include <vector>

#include "crossn/combinatorics.hpp"
#include "crossn/cross_vector.hpp"
#include "crossn/matrix.hpp"

namespace crossn {

/// Caps applied before a compound matrix is materialized.
struct CompoundLimits {
  int max_dim = 20;
  std::uint64_t max_entries = std::uint64_t{1} << 24;
};

/// Matrix of all k x k minors of a source matrix. Entry (i, j) is the minor
/// on (row_labels[i], col_labels[j]); labels are lexicographic.
struct CompoundMatrix {
  int k;
  int source_rows;
  int source_cols;
  Matrix matrix;
  std::vector<Combination> row_labels;
  std::vector<Combination> col_labels;
};

Scalar minor(const Matrix& a, const Combination& row_sel, const Combination& col_sel);

/// Minors of every m-row selection of the n x m matrix x against all of its
/// columns.
CrossVector row_minor_vector(const Matrix& x, const CompoundLimits& limits = {});

CompoundMatrix compound_matrix(const Matrix& a, int k, const CompoundLimits& limits = {});

/// Both sides of the Cauchy-Binet identity for a (m x n) and b (n x m):
/// lhs = det(ab), rhs = sum over m-subsets S of {1..n} of det(a[:,S]) det(b[S,:]),
/// and rhs = 0 when m > n.
struct CauchyBinetSides {
  Scalar lhs;
  Scalar rhs;
};

CauchyBinetSides cauchy_binet(const Matrix& a, const Matrix& b);

}  // namespace crossn
