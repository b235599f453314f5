#include "painted/error.hpp"

namespace painted {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::UnsupportedTwist: return "UnsupportedTwist";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::KacViolation: return "KacViolation";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::Unrecognized: return "Unrecognized";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DiagramMismatch: return "DiagramMismatch";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace painted
