// Reference kernels. Complex products are spelled out on the real and
// imaginary parts so the scalar and vector paths round identically apart
// from fused multiply-adds and summation order.

#include "crossn/kernels.hpp"

namespace crossn::kernels {
namespace {

void axpy_scalar(Scalar alpha, const Scalar* x, Scalar* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Scalar(y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr));
  }
}

Scalar dotu_scalar(const Scalar* x, const Scalar* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

Scalar dotc_scalar(const Scalar* x, const Scalar* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm_sq_scalar(const Scalar* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

constexpr KernelTable kScalar{Isa::Scalar, "scalar", axpy_scalar, dotu_scalar, dotc_scalar,
                              norm_sq_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace crossn::kernels
