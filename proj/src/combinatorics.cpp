#include "crossn/combinatorics.hpp"

#include <algorithm>
#include <sstream>

#include "crossn/error.hpp"

namespace crossn {

Combination::Combination(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) raise(ErrorKind::InvalidIndex, "combination must not be empty");
  if (indices_.front() < 1)
    raise(ErrorKind::InvalidIndex, "combination indices are 1-based: " + to_string());
  for (std::size_t p = 1; p < indices_.size(); ++p) {
    if (indices_[p] <= indices_[p - 1])
      raise(ErrorKind::InvalidIndex, "combination must be strictly increasing: " + to_string());
  }
}

Combination Combination::leading(int m) {
  if (m < 1) raise(ErrorKind::InvalidDimension, "combination size must be at least 1");
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  return Combination(std::move(idx));
}

void Combination::require_fits(int n) const {
  if (!fits(n))
    raise(ErrorKind::InvalidIndex,
          "combination " + to_string() + " out of range for dimension " + std::to_string(n));
}

std::string Combination::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    if (p) os << ',';
    os << indices_[p];
  }
  os << '}';
  return os.str();
}

namespace {

void check_permutation(std::span<const int> entries) {
  const auto k = entries.size();
  std::vector<bool> seen(k, false);
  for (int e : entries) {
    if (e < 1 || static_cast<std::size_t>(e) > k || seen[static_cast<std::size_t>(e - 1)])
      raise(ErrorKind::InvalidPermutation, "not a permutation of 1.." + std::to_string(k));
    seen[static_cast<std::size_t>(e - 1)] = true;
  }
}

void check_shape(int n, int m) {
  if (n < 1 || m < 1 || m > n)
    raise(ErrorKind::InvalidDimension,
          "need 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  if (n > kMaxDimension)
    raise(ErrorKind::Capacity, "dimension " + std::to_string(n) + " exceeds " +
                                   std::to_string(kMaxDimension));
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  check_permutation(entries_);
}

Permutation Permutation::identity(int k) {
  std::vector<int> e(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(e));
}

Permutation Permutation::compose(const Permutation& q) const {
  if (q.size() != size()) raise(ErrorKind::Dimension, "composing permutations of different sizes");
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = entries_[static_cast<std::size_t>(q.entries_[i] - 1)];
  return Permutation(std::move(out));
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kMaxDimension)
    raise(ErrorKind::Capacity, "binomial argument " + std::to_string(n) + " exceeds " +
                                   std::to_string(kMaxDimension));
  k = std::min(k, n - k);
  __extension__ typedef unsigned __int128 wide;
  wide c = 1;
  for (int i = 1; i <= k; ++i) {
    // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at every step.
    c = c * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
    if (c > UINT64_MAX) raise(ErrorKind::Capacity, "binomial overflow");
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<Combination> enumerate_combinations(int n, int m) {
  check_shape(n, m);
  const auto count = binomial(n, m);
  if (count > (std::uint64_t{1} << 26))
    raise(ErrorKind::Capacity, "C(" + std::to_string(n) + "," + std::to_string(m) +
                                   ") combinations is too many to materialize");
  std::vector<Combination> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.emplace_back(idx);
    // Advance to lexicographic successor: bump the rightmost index that can move.
    int p = m - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - m + p + 1) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < m; ++q)
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

std::uint64_t rank_combination(const Combination& c, int n) {
  c.require_fits(n);
  check_shape(n, c.size());
  const int m = c.size();
  std::uint64_t r = 0;
  int prev = 0;
  for (int p = 0; p < m; ++p) {
    // Skip every combination whose p-th entry is smaller than c[p].
    for (int v = prev + 1; v < c[p]; ++v) r += binomial(n - v, m - p - 1);
    prev = c[p];
  }
  return r;
}

Combination unrank_combination(std::uint64_t r, int n, int m) {
  check_shape(n, m);
  if (r >= binomial(n, m))
    raise(ErrorKind::InvalidRank, "rank " + std::to_string(r) + " out of range for C(" +
                                      std::to_string(n) + "," + std::to_string(m) + ")");
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(m));
  int v = 1;
  for (int p = 0; p < m; ++p) {
    for (;; ++v) {
      const auto block = binomial(n - v, m - p - 1);
      if (r < block) break;
      r -= block;
    }
    idx.push_back(v++);
  }
  return Combination(std::move(idx));
}

int permutation_parity(std::span<const int> entries) {
  check_permutation(entries);
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i] > entries[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int permutation_parity(const Permutation& p) { return permutation_parity(p.entries()); }

}  // namespace crossn
