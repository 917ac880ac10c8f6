#pragma once

#include <optional>
#include <vector>

#include "crossn/combinatorics.hpp"
#include "crossn/matrix.hpp"

namespace crossn {

struct CrossComponent {
  Combination label;
  Scalar value;
};

/// The C(n, m) signed m x m minors of an n x m matrix, labeled by the row
/// combination they were taken from, in lexicographic label order.
class CrossVector {
 public:
  /// Labels are generated; `values` must have C(n, m) entries in
  /// lexicographic label order.
  CrossVector(int n, int m, std::vector<Scalar> values);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return components_.size(); }

  const std::vector<CrossComponent>& components() const noexcept { return components_; }
  const CrossComponent& operator[](std::size_t i) const noexcept { return components_[i]; }

  /// Component for `label`, if it belongs to this vector's (n, m).
  std::optional<Scalar> at(const Combination& label) const;

  Vector values() const;
  /// Sum of squared moduli, i.e. the squared Euclidean volume.
  double norm_sq() const;
  double norm() const;

 private:
  int n_;
  int m_;
  std::vector<CrossComponent> components_;
};

}  // namespace crossn
