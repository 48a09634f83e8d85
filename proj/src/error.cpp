#include "subord/error.hpp"

namespace subord {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PoleAtBoundary: return "PoleAtBoundary";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::GridDegenerate: return "GridDegenerate";
    case ErrorKind::NonMonotoneProbe: return "NonMonotoneProbe";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace subord
