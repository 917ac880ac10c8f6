#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace crossn {

using Scalar = std::complex<double>;

namespace kernels {

// Interleaved complex inner loops shared by elimination, multiplication and
// Gram assembly. Each instruction set provides the same four entry points;
// one table is selected at first use from the running CPU.

using AxpyFn = void (*)(Scalar alpha, const Scalar* x, Scalar* y, std::size_t n);
using DotFn = Scalar (*)(const Scalar* x, const Scalar* y, std::size_t n);
using NormSqFn = double (*)(const Scalar* x, std::size_t n);

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  AxpyFn axpy;     // y += alpha * x
  DotFn dotu;      // sum x[i] * y[i]
  DotFn dotc;      // sum conj(x[i]) * y[i]
  NormSqFn norm_sq;  // sum |x[i]|^2
};

const KernelTable& scalar_table() noexcept;
#if defined(CROSSN_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif

/// True when the table for `isa` is compiled in and the CPU can run it.
bool supported(Isa isa) noexcept;

/// Tables usable on this machine, scalar first.
std::vector<const KernelTable*> available() noexcept;

/// Currently dispatched table. Defaults to the widest supported ISA unless
/// the CROSSN_KERNELS environment variable names another ("scalar", "avx2").
const KernelTable& active() noexcept;

/// Override the dispatched table; returns false if `isa` is unsupported.
bool select(Isa isa) noexcept;

inline void axpy(Scalar alpha, std::span<const Scalar> x, std::span<Scalar> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline Scalar dotu(std::span<const Scalar> x, std::span<const Scalar> y) {
  return active().dotu(x.data(), y.data(), x.size());
}
inline Scalar dotc(std::span<const Scalar> x, std::span<const Scalar> y) {
  return active().dotc(x.data(), y.data(), x.size());
}
inline double norm_sq(std::span<const Scalar> x) {
  return active().norm_sq(x.data(), x.size());
}

}  // namespace kernels
}  // namespace crossn
