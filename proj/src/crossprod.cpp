#include "crossn/crossprod.hpp"

#include <cmath>
#include <string>

#include "crossn/error.hpp"

namespace crossn {
namespace {

Matrix pack(std::span<const Vector> vectors) {
  const Matrix x = Matrix::from_columns(vectors);
  if (x.cols() > x.rows())
    raise(ErrorKind::Dimension, std::to_string(x.cols()) + " vectors in " +
                                    std::to_string(x.rows()) + " dimensions: need m <= n");
  return x;
}

}  // namespace

CrossVector cross(std::span<const Vector> vectors) { return row_minor_vector(pack(vectors)); }

double euclidean_volume(std::span<const Vector> vectors, double tol) {
  return euclidean_volume(pack(vectors), tol);
}

double euclidean_volume(const Matrix& x, double tol) {
  if (x.cols() > x.rows())
    raise(ErrorKind::Dimension, std::to_string(x.cols()) + " vectors in " +
                                    std::to_string(x.rows()) + " dimensions: need m <= n");
  const Scalar det = determinant(matmul(conjugate_transpose(x), x));
  double scale = 1.0;
  for (std::size_t j = 0; j < x.cols(); ++j) scale *= kernels::norm_sq(x.column(j));
  const double q = det.real();
  if (std::abs(det.imag()) > 1e-8 * (1.0 + std::abs(q)) + tol * scale)
    raise(ErrorKind::Numeric, "Gram determinant has imaginary residue " +
                                  std::to_string(det.imag()));
  if (q >= 0.0) return std::sqrt(q);
  if (q >= -tol * scale) return 0.0;
  raise(ErrorKind::Numeric,
        "Gram determinant " + std::to_string(q) + " is negative beyond rounding");
}

std::vector<std::pair<Combination, double>> pythagorean_decomposition(const CrossVector& v) {
  std::vector<std::pair<Combination, double>> out;
  out.reserve(v.size());
  for (const auto& c : v.components()) out.emplace_back(c.label, std::abs(c.value));
  return out;
}

Vector hodge_dual(const CrossVector& v) {
  const int n = v.n();
  if (v.m() != n - 1)
    raise(ErrorKind::UnsupportedShape, "Hodge dual needs m = n - 1, got n=" + std::to_string(n) +
                                           " m=" + std::to_string(v.m()));
  // Labels are lexicographic, so the complement of {i} sits at position n - i.
  Vector h(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Scalar c = v[static_cast<std::size_t>(n - i)].value;
    h[static_cast<std::size_t>(i - 1)] = (i % 2 == 1) ? c : -c;
  }
  return h;
}

}  // namespace crossn
