#pragma once

#include <cstdint>

#include "teichkit/error.hpp"

namespace teichkit::detail {

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer overflow in product");
  return r;
}

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer overflow in sum");
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer overflow in difference");
  return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

/// Floor division for any sign of the operands.
inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace teichkit::detail
