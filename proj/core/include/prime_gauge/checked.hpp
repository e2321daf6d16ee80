#pragma once

#include <cstdint>
#include <string>

#include "prime_gauge/errors.hpp"

namespace prime_gauge {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(std::string(what) + ": " + std::to_string(a) + " * " +
                        std::to_string(b) + " overflows 64 bits");
  }
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError(std::string(what) + ": " + std::to_string(a) + " + " +
                        std::to_string(b) + " overflows 64 bits");
  }
  return out;
}

inline std::uint64_t checked_square(std::uint64_t a, const char* what) {
  return checked_mul(a, a, what);
}

inline std::uint64_t checked_pow2(unsigned exponent, const char* what) {
  if (exponent >= 64) {
    throw OverflowError(std::string(what) + ": 2^" + std::to_string(exponent) +
                        " overflows 64 bits");
  }
  return std::uint64_t{1} << exponent;
}

// floor(sqrt(n)), exact for the whole 64-bit range.
constexpr std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << 32;  // hi*hi > n for every 64-bit n
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace prime_gauge
