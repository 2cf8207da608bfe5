#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace troptp {

enum class ErrorCode {
  Shape,
  TooLarge,
  RequiresFinite,
  Cyclic,
  Disconnected,
  NotAPath,
  NotTp,
  BadIndex,
  ZeroSeries,
  Parse,
};

/// Stable short name of an error code ("shape", "too-large", ...).
std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception. what() is
/// "<code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace troptp
