#pragma once

#include <limits>

#include "teichkit/error.hpp"

namespace teichkit {

/// Absolute tolerance used by every approximate comparison in the library.
///
/// Functions that compare floating values take a `Tolerance` argument
/// defaulting to `Tolerance{}`; callers override it for a whole call chain by
/// passing their own value down.
class Tolerance {
 public:
  static constexpr double kDefaultEps = 1e-9;

  constexpr Tolerance() = default;
  constexpr explicit Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0) || eps == std::numeric_limits<double>::infinity()) {
      throw Error(ErrorCode::InvalidArgument, "tolerance must be positive and finite");
    }
  }

  constexpr double eps() const { return eps_; }
  constexpr Tolerance scaled(double factor) const { return Tolerance(eps_ * factor); }

 private:
  double eps_ = kDefaultEps;
};

}  // namespace teichkit
