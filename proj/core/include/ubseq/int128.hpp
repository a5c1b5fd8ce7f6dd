#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ubseq {

/// Unsigned 128-bit integer. As a fraction of one it represents x / 2^128.
using u128 = unsigned __int128;

inline constexpr u128 make_u128(std::uint64_t hi, std::uint64_t lo) {
  return (static_cast<u128>(hi) << 64) | lo;
}

inline constexpr std::uint64_t hi64(u128 x) { return static_cast<std::uint64_t>(x >> 64); }
inline constexpr std::uint64_t lo64(u128 x) { return static_cast<std::uint64_t>(x); }

/// Fraction x / 2^128 rounded to double, using the leading 53 bits.
inline double unit_fraction(u128 x) {
  return static_cast<double>(static_cast<std::uint64_t>(x >> 75)) * 0x1p-53;
}

/// Fraction x / 2^128 in extended precision (64 significant bits).
inline long double unit_fraction_ld(u128 x) {
  return static_cast<long double>(x) * 0x1p-128L;
}

/// Length of the shorter arc between two points of R/Z encoded as 128-bit fractions.
inline long double circle_distance(u128 x, u128 y) {
  const u128 d = x - y;
  const u128 e = y - x;
  return unit_fraction_ld(d < e ? d : e);
}

/// 32 lowercase hex digits, most significant first.
std::string to_hex(u128 x);

/// Parses exactly 32 hex digits; throws ValidationError otherwise.
u128 parse_hex128(std::string_view text);

}  // namespace ubseq
