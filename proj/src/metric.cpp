#include "crossn/metric.hpp"

#include <cmath>
#include <string>

#include "crossn/error.hpp"

namespace crossn {

MetricSpace validate_metric(const Matrix& g, double tol) {
  if (!g.square())
    raise(ErrorKind::InvalidMetric, "metric must be square, got " + std::to_string(g.rows()) +
                                        "x" + std::to_string(g.cols()));
  if (!is_hermitian(g, tol)) raise(ErrorKind::InvalidMetric, "metric is not Hermitian");
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (std::abs(g(i, i).imag()) > tol)
      raise(ErrorKind::InvalidMetric,
            "metric diagonal entry " + std::to_string(i + 1) + " has an imaginary part");
  }
  return MetricSpace(g, tol);
}

bool is_positive_definite(const MetricSpace& ms) {
  for (int k = 1; k <= ms.n(); ++k) {
    const auto lead = Combination::leading(k);
    if (!(minor(ms.g(), lead, lead).real() > 0.0)) return false;
  }
  return true;
}

Matrix gram(const Matrix& x, const MetricSpace& ms) {
  if (static_cast<int>(x.rows()) != ms.n())
    raise(ErrorKind::Dimension, "vectors have dimension " + std::to_string(x.rows()) +
                                    " but the metric is " + std::to_string(ms.n()) + "x" +
                                    std::to_string(ms.n()));
  return matmul(conjugate_transpose(x), matmul(ms.g(), x));
}

CompoundMatrix metric_compound(const MetricSpace& ms, int m) {
  if (m < 1 || m > ms.n())
    raise(ErrorKind::Dimension, "metric compound order " + std::to_string(m) +
                                    " out of range for n=" + std::to_string(ms.n()));
  return compound_matrix(ms.g(), m);
}

SignedVolume signed_squared_volume(const Matrix& x, const MetricSpace& ms, double zero_rel) {
  if (x.cols() > x.rows())
    raise(ErrorKind::Dimension, std::to_string(x.cols()) + " vectors in " +
                                    std::to_string(x.rows()) + " dimensions: need m <= n");
  const Matrix gx = matmul(ms.g(), x);
  const Matrix gr = matmul(conjugate_transpose(x), gx);
  const Scalar det = determinant(gr);
  const double q = det.real();
  if (std::abs(det.imag()) > 1e-8 * (1.0 + std::abs(q)))
    raise(ErrorKind::Numeric, "Gram determinant has imaginary residue " +
                                  std::to_string(det.imag()));
  double scale = 1.0;
  for (std::size_t j = 0; j < gr.rows(); ++j) scale *= std::abs(gr(j, j));
  const double threshold = zero_rel * (1.0 + scale);
  const int sign = std::abs(q) <= threshold ? 0 : (q > 0.0 ? 1 : -1);
  return {q, std::sqrt(std::abs(q)), sign};
}

Scalar cross_inner(const CrossVector& u, const CrossVector& v, const MetricSpace& ms) {
  if (u.n() != v.n() || u.m() != v.m() || u.n() != ms.n())
    raise(ErrorKind::Dimension, "cross_inner needs matching shapes, got (" +
                                    std::to_string(u.n()) + "," + std::to_string(u.m()) + "), (" +
                                    std::to_string(v.n()) + "," + std::to_string(v.m()) +
                                    ") under n=" + std::to_string(ms.n()));
  const auto gm = metric_compound(ms, u.m());
  const Vector uv = u.values();
  const Vector vv = v.values();
  Vector gv(vv.size());
  for (std::size_t i = 0; i < gv.size(); ++i) gv[i] = kernels::dotu(gm.matrix.row(i), vv);
  return kernels::dotc(uv, gv);
}

double subspace_volume_element(const MetricSpace& ms, const Combination& sel) {
  sel.require_fits(ms.n());
  return std::sqrt(std::abs(minor(ms.g(), sel, sel)));
}

}  // namespace crossn
