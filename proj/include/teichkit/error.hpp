#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace teichkit {

enum class ErrorCode {
  InvalidArgument,
  NonFinite,
  SingularMatrix,
  NotUnimodular,
  MismatchedFiber,
  NotContracting,
  InvalidPoint,
  SamePoint,
  NotOnCircle,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// All domain failures are reported through this exception; the code is what
// the command-line front end prints in its error document.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace teichkit
