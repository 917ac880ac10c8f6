#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crossn {

enum class ErrorKind {
  InvalidDimension,
  Dimension,
  InvalidIndex,
  InvalidRank,
  InvalidPermutation,
  Capacity,
  InvalidMetric,
  Numeric,
  UnsupportedShape,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace crossn
