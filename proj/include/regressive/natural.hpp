#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace regressive {

/// Arbitrary-precision natural number. Values of the fast-growing hierarchy
/// leave 64 bits almost immediately, so nothing in the hierarchy is fixed-width.
using Natural = boost::multiprecision::cpp_int;

/// Largest t with t * t <= n.
inline Natural isqrt(const Natural& n) { return boost::multiprecision::sqrt(n); }

/// floor(floor(sqrt(n)) / 2), i.e. the largest t with (2t)^2 <= n.
inline Natural isqrt_half(const Natural& n) { return isqrt(n) >> 1; }

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  // Newton from above; exact for the whole 64-bit range.
  if (n < 2) return n;
  std::uint64_t x = n;
  std::uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

inline std::uint64_t isqrt_half_u64(std::uint64_t n) { return isqrt_u64(n) / 2; }

inline std::optional<std::uint64_t> to_u64(const Natural& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return n.convert_to<std::uint64_t>();
}

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace regressive
