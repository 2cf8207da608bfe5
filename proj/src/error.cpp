#include "troptp/error.hpp"

namespace troptp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Shape: return "shape";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::RequiresFinite: return "requires-finite";
    case ErrorCode::Cyclic: return "cyclic";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::NotAPath: return "not-a-path";
    case ErrorCode::NotTp: return "not-tp";
    case ErrorCode::BadIndex: return "bad-index";
    case ErrorCode::ZeroSeries: return "zero-series";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace troptp
