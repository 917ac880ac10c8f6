#pragma once

#include <span>
#include <utility>
#include <vector>

#include "crossn/compound.hpp"
#include "crossn/cross_vector.hpp"
#include "crossn/matrix.hpp"

namespace crossn {

/// Cross product of m column vectors in n-space (1 <= m <= n): the
/// C(n, m) minors of X = (X1 ... Xm). With m = n it is the single
/// determinant; with m = 1 it is the vector itself.
CrossVector cross(std::span<const Vector> vectors);

/// m-volume of the parallelotope spanned by the vectors under the identity
/// metric, sqrt(det(X^H X)). Gram determinants in [-tol * scale, 0) are
/// clamped to zero (scale = product of squared column norms); anything more
/// negative raises a Numeric error.
double euclidean_volume(std::span<const Vector> vectors, double tol = 1e-9);

/// Same quantity for a matrix whose columns are the vectors.
double euclidean_volume(const Matrix& x, double tol = 1e-9);

/// (label, |component|): the volume of the projection onto each coordinate
/// m-subspace. Squares sum to the squared volume.
std::vector<std::pair<Combination, double>> pythagorean_decomposition(const CrossVector& v);

/// Classical signed cross product recovered from an (n-1)-vector cross
/// product: h_i = (-1)^(i-1) * component labeled {1..n} \ {i}.
Vector hodge_dual(const CrossVector& v);

}  // namespace crossn
