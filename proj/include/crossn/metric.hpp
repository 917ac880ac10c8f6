#pragma once

#include "crossn/compound.hpp"
#include "crossn/cross_vector.hpp"
#include "crossn/matrix.hpp"

namespace crossn {

/// A constant Hermitian metric matrix G on n-space. Indefinite and singular
/// metrics are allowed; immutable once validated.
class MetricSpace {
 public:
  int n() const noexcept { return static_cast<int>(g_.rows()); }
  const Matrix& g() const noexcept { return g_; }
  double hermitian_tol() const noexcept { return tol_; }

 private:
  friend MetricSpace validate_metric(const Matrix& g, double tol);
  MetricSpace(Matrix g, double tol) : g_(std::move(g)), tol_(tol) {}

  Matrix g_;
  double tol_;
};

MetricSpace validate_metric(const Matrix& g, double tol = 1e-9);

/// Sylvester's criterion: every leading principal minor has positive real part.
bool is_positive_definite(const MetricSpace& ms);

/// X^H G X for an n x m matrix x.
Matrix gram(const Matrix& x, const MetricSpace& ms);

/// Compound of order m of the metric: entries det(G[I, J]).
CompoundMatrix metric_compound(const MetricSpace& ms, int m);

/// Signed squared volume Q = det(X^H G X), which is real for Hermitian G.
/// Negative Q arises only under indefinite metrics.
struct SignedVolume {
  double squared;
  double magnitude;  // sqrt(|Q|)
  int sign;          // -1, 0, +1; 0 iff |Q| <= zero threshold
};

/// Zero threshold is zero_rel * (1 + prod_j |x_j^H G x_j|).
SignedVolume signed_squared_volume(const Matrix& x, const MetricSpace& ms,
                                   double zero_rel = 1e-10);

/// u^H G~(m) v.
Scalar cross_inner(const CrossVector& u, const CrossVector& v, const MetricSpace& ms);

/// sqrt(|det G[sel, sel]|): the volume spanned by the selected basis vectors.
double subspace_volume_element(const MetricSpace& ms, const Combination& sel);

}  // namespace crossn
