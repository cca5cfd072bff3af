#pragma once

#include <cstdint>
#include <string>

#include "quasicartan/error.hpp"

namespace qc {

using Int = std::int64_t;

// All entry arithmetic goes through these; wraparound is never silent.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::overflow, "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::overflow, "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::overflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

// sgn(0) = 0.
constexpr int sgn(Int a) noexcept { return (a > 0) - (a < 0); }

// [b]_+ = max(b, 0)
constexpr Int positive_part(Int a) noexcept { return a > 0 ? a : 0; }

enum class Sign : int { negative = -1, positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}

}  // namespace qc
