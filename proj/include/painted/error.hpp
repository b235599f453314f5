#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace painted {

enum class ErrorKind {
  InvalidType,
  UnsupportedTwist,
  NotAffine,
  KacViolation,
  InvalidParameters,
  Unrecognized,
  TooLarge,
  DiagramMismatch,
  NotAdmissible,
  WrongCase,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Domain error carrying a structured kind; what() is "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace painted
