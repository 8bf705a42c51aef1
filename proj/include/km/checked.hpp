#pragma once

#include <cstdint>
#include <limits>

#include "km/error.hpp"

// Overflow-checked 64-bit arithmetic. Every integer that can grow (matrix
// entries, root coordinates, determinants, group orders) goes through these.

namespace km::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication overflow");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication overflow");
  return r;
}

inline std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(Errc::Overflow, "intermediate value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

}  // namespace km::checked
