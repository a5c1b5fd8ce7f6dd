#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ubseq/int128.hpp"

namespace ubseq {

/// A rotation angle in [0, 1): either an exact reduced fraction p/q or a
/// 128-bit fixed-point fraction (the surrogate for irrational angles).
class Theta {
 public:
  /// Reduces p/q. Requires q > 0 and p < q.
  static Theta rational(std::uint64_t p, std::uint64_t q);
  static Theta fixed(u128 frac) { return Theta(frac); }

  bool is_rational() const { return rational_; }
  std::uint64_t numerator() const { return p_; }
  std::uint64_t denominator() const { return q_; }

  /// Fixed-point form; rationals are truncated to floor(p * 2^128 / q).
  u128 to_fixed() const;
  double to_double() const;
  bool is_zero() const { return rational_ ? p_ == 0 : frac_ == 0; }

  /// "rat:p/q" or "fix:<32 hex digits>".
  std::string to_string() const;

  bool operator==(const Theta&) const = default;

 private:
  explicit Theta(u128 frac) : rational_(false), frac_(frac) {}
  Theta(std::uint64_t p, std::uint64_t q) : rational_(true), p_(p), q_(q) {}

  bool rational_ = false;
  std::uint64_t p_ = 0;
  std::uint64_t q_ = 1;
  u128 frac_ = 0;
};

/// floor(2^128 * (sqrt(5) - 1) / 2).
u128 golden_fraction();
/// floor(2^128 * (sqrt(2) - 1)).
u128 sqrt2m1_fraction();

/// Parses "rat:p/q", "fix:<32 hex>", "golden" or "sqrt2m1". The angle must lie in (0, 1).
Theta theta_parse(std::string_view text);

}  // namespace ubseq
