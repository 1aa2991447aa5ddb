#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psns {

using i64 = std::int64_t;

/// Thrown when a 64-bit signed computation would wrap.
struct arithmetic_overflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw arithmetic_overflow("add overflow: " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw arithmetic_overflow("sub overflow: " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw arithmetic_overflow("mul overflow: " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

} // namespace psns
