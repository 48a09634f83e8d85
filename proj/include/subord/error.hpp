#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subord {

enum class ErrorKind {
  InvalidArgument,
  PoleAtBoundary,
  DegenerateInput,
  UnsupportedCase,
  GridDegenerate,
  NonMonotoneProbe,
};

/// Stable name of an error kind, as surfaced by the CLI.
std::string_view error_name(ErrorKind kind) noexcept;

/// Library exception. what() is "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace subord
