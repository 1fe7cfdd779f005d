#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "regressive/natural.hpp"

namespace regressive {

/// Cantor pairing Pr(m, n) = C(m+n+1, 2) + n, a bijection N x N -> N that is
/// monotone in each argument. Throws std::overflow_error past 64 bits.
inline std::uint64_t cantor_pair(std::uint64_t m, std::uint64_t n) {
  using u128 = unsigned __int128;
  const u128 s = u128(m) + n;
  const u128 p = s * (s + 1) / 2 + n;
  if (p > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("cantor_pair: result exceeds 64 bits");
  return static_cast<std::uint64_t>(p);
}

/// Inverse of cantor_pair.
inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t p) {
  // s is the largest value with s(s+1)/2 <= p, i.e. floor((sqrt(8p+1) - 1) / 2).
  using u128 = unsigned __int128;
  const Natural disc = Natural(p) * 8 + 1;
  std::uint64_t s = ((isqrt(disc) - 1) / 2).convert_to<std::uint64_t>();
  const u128 tri = u128(s) * (s + 1) / 2;
  const std::uint64_t n = static_cast<std::uint64_t>(u128(p) - tri);
  return {s - n, n};
}

}  // namespace regressive
