#pragma once

#include <bit>
#include <cstdint>

namespace ubseq {

enum class AutomaticKind { ThueMorse, RudinShapiro };

/// Thue-Morse: parity of the number of ones in binary n.
constexpr int thue_morse_bit(std::uint64_t n) { return std::popcount(n) & 1; }

/// Rudin-Shapiro: 1 when the overlapping pattern "11" occurs an even number
/// of times in binary n, else 0.
constexpr int rudin_shapiro_bit(std::uint64_t n) {
  return (std::popcount(n & (n >> 1)) & 1) ? 0 : 1;
}

constexpr int automatic_bit(AutomaticKind kind, std::uint64_t n) {
  return kind == AutomaticKind::ThueMorse ? thue_morse_bit(n) : rudin_shapiro_bit(n);
}

}  // namespace ubseq
