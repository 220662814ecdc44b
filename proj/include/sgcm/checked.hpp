#pragma once

#include <cstdint>
#include <numeric>

#include "sgcm/error.hpp"

namespace sgcm {

// Fixed-width arithmetic that refuses to wrap.

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

/// Residue in [0, m) for m > 0.
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// Floor division for y > 0.
inline std::int64_t div_floor(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  return (x % y != 0 && x < 0) ? q - 1 : q;
}

inline std::int64_t checked_lcm(std::int64_t x, std::int64_t y) {
  if (x == 0 || y == 0) return 0;
  return checked_mul(x / std::gcd(x, y), y);
}

}  // namespace sgcm
