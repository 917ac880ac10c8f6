#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "crossn/cross_vector.hpp"
#include "crossn/matrix.hpp"

namespace crossn::oracles {

// Brute-force references. They share only Combination/Permutation with the
// main code path: no elimination, no kernels, no compound routines.

inline constexpr int kNaiveMaxDim = 9;

/// Permutation-sum determinant. Throws Capacity above kNaiveMaxDim.
Scalar det_naive(const Matrix& a);

/// Cross product assembled entry by entry from det_naive minors.
CrossVector cross_naive(std::span<const Vector> vectors);

struct Theorem1Report {
  bool passed;
  Scalar lhs;  // determinant(matmul(a, b)), main path
  Scalar rhs;  // explicit combination sum of det_naive minors
  double gap;  // |lhs - rhs|
};

/// Passes when gap <= tol * (1 + |lhs|).
Theorem1Report verify_theorem1(const Matrix& a, const Matrix& b, double tol = 1e-9);

struct Theorem2Report {
  bool passed;
  double max_gap;  // max over entries of |lhs - rhs| / (1 + |rhs|)
};

/// compound_matrix(matmul(a, b), k) from the main path against the product
/// of det_naive compounds of a and b.
Theorem2Report verify_theorem2(const Matrix& a, const Matrix& b, int k, double tol = 1e-9);

// Random instances. Entries are uniform on [-1, 1]; complex entries draw
// real and imaginary parts independently.

using Rng = std::mt19937_64;

/// Independent per-trial seed derived from a base seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) noexcept;

double uniform(Rng& rng, double lo = -1.0, double hi = 1.0);
int uniform_int(Rng& rng, int lo, int hi);

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool complex);

/// Orthonormalize a random matrix (modified Gram-Schmidt), then rescale one
/// column so the determinant is exactly 1 up to rounding. Real input gives
/// SO(n), complex gives SU(n).
Matrix random_special_unitary(Rng& rng, std::size_t n, bool complex);

/// H = D + eps * (P + P^H) / 2 with D = diag(+-1) and P random. With
/// `indefinite` false all diagonal signs are +1.
Matrix random_hermitian(Rng& rng, std::size_t n, bool complex, bool indefinite,
                        double perturbation = 0.3);

enum class Theorem { CauchyBinet = 1, CompoundProduct = 2 };

struct VerifyOptions {
  Theorem theorem = Theorem::CauchyBinet;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  int max_dim = 6;
  double tolerance = 1e-9;
  bool complex = false;
};

struct VerifyReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double worst_gap = 0.0;
  std::uint64_t worst_seed = 0;
  bool has_failure = false;
  std::uint64_t first_failing_seed = 0;

  bool passed() const noexcept { return failures == 0; }
};

/// Runs `trials` random instances; trial i uses trial_seed(seed, i).
/// Throws InvalidDimension unless 1 <= max_dim <= kNaiveMaxDim and trials >= 1.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace crossn::oracles
