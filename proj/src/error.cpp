#include "crossn/error.hpp"

namespace crossn {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::InvalidIndex: return "invalid-index";
    case ErrorKind::InvalidRank: return "invalid-rank";
    case ErrorKind::InvalidPermutation: return "invalid-permutation";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::InvalidMetric: return "invalid-metric";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::UnsupportedShape: return "unsupported-shape";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace crossn
