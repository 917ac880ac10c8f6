#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crossn {

/// Largest ambient dimension for which every C(n, m) fits in 64 bits.
inline constexpr int kMaxDimension = 62;

/// Strictly increasing list of 1-based indices. Used as row/column
/// selections for minors and as the component labels of a cross vector.
class Combination {
 public:
  Combination() = default;
  explicit Combination(std::vector<int> indices);
  Combination(std::initializer_list<int> indices)
      : Combination(std::vector<int>(indices)) {}

  /// {1, 2, ..., m}
  static Combination leading(int m);

  std::span<const int> indices() const noexcept { return indices_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool empty() const noexcept { return indices_.empty(); }
  /// p-th selected index (0-based position, 1-based value).
  int operator[](int p) const noexcept { return indices_[static_cast<std::size_t>(p)]; }
  int back() const noexcept { return indices_.back(); }

  bool fits(int n) const noexcept { return !empty() && back() <= n; }
  /// Throws InvalidIndex unless every index lies in [1, n].
  void require_fits(int n) const;

  std::string to_string() const;

  friend auto operator<=>(const Combination&, const Combination&) = default;
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  std::vector<int> indices_;
};

/// Rearrangement of 1..k.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(int k);

  std::span<const int> entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }

  /// (p ∘ q)(i) = p(q(i))
  Permutation compose(const Permutation& q) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// C(n, k) with overflow checking. Returns 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

std::vector<Combination> enumerate_combinations(int n, int m);

/// 0-based lexicographic position of c among the |c|-subsets of {1..n}.
std::uint64_t rank_combination(const Combination& c, int n);

Combination unrank_combination(std::uint64_t r, int n, int m);

/// (-1)^inversions, +1 or -1.
int permutation_parity(const Permutation& p);

/// Validating overload for raw entry lists; throws InvalidPermutation.
int permutation_parity(std::span<const int> entries);

}  // namespace crossn
