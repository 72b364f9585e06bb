#pragma once

#include "curvelink/error.hpp"

#include <cstdint>
#include <limits>

namespace curvelink::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("integer overflow in negation");
  return -a;
}

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

// a + b * c
inline std::int64_t fma(std::int64_t a, std::int64_t b, std::int64_t c) { return add(a, mul(b, c)); }

/// Remainder in [0, m) for m > 0.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return mul(abs(a) / gcd(a, b), abs(b));
}

} // namespace curvelink::checked
