#include "teichkit/error.hpp"

namespace teichkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::MismatchedFiber: return "MismatchedFiber";
    case ErrorCode::NotContracting: return "NotContracting";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::NotOnCircle: return "NotOnCircle";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace teichkit
