#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ubseq {

/// Default ceiling on transient sieve memory (tables plus scratch).
inline constexpr std::uint64_t kDefaultSieveBudget = std::uint64_t{4} << 30;
inline constexpr std::uint64_t kMaxSieveN = std::uint64_t{1} << 32;

/// Omega, omega, Moebius and the square-free indicator for 1..max_n.
///
/// Arrays are indexed directly by n; slot 0 is unused and holds zero.
/// Immutable after construction and safe to share across threads.
class ArithmeticFunctionTable {
 public:
  /// Linear smallest-prime-factor sieve. Requires 2 <= max_n <= 2^32.
  /// Throws CapacityError when the estimated footprint exceeds `memory_budget`.
  static ArithmeticFunctionTable build(std::uint64_t max_n,
                                       std::uint64_t memory_budget = kDefaultSieveBudget);

  /// Reassembles a table from per-n arrays of length max_n + 1 (slot 0 ignored).
  /// The square-free indicator is rederived from Moebius; `squarefree_bits`,
  /// when non-empty, must agree with it.
  static ArithmeticFunctionTable from_arrays(std::vector<std::uint8_t> big_omega,
                                             std::vector<std::uint8_t> small_omega,
                                             std::vector<std::int8_t> mobius,
                                             std::span<const std::uint8_t> squarefree_bits = {});

  /// Bytes needed by build(max_n), including the scratch smallest-factor array.
  static std::uint64_t estimated_bytes(std::uint64_t max_n);

  std::uint64_t max_n() const { return max_n_; }

  std::uint8_t big_omega(std::uint64_t n) const { return big_omega_[n]; }
  std::uint8_t small_omega(std::uint64_t n) const { return small_omega_[n]; }
  std::int8_t mobius(std::uint64_t n) const { return mobius_[n]; }
  bool squarefree(std::uint64_t n) const { return (squarefree_[n >> 6] >> (n & 63)) & 1u; }
  /// (-1)^Omega(n), derived from Omega parity only.
  int liouville(std::uint64_t n) const { return (big_omega_[n] & 1u) ? -1 : 1; }
  bool is_prime(std::uint64_t n) const { return big_omega_[n] == 1; }

  std::span<const std::uint8_t> big_omega_data() const { return big_omega_; }
  std::span<const std::uint8_t> small_omega_data() const { return small_omega_; }
  std::span<const std::int8_t> mobius_data() const { return mobius_; }
  /// Bit n of the word array is the square-free flag of n.
  std::span<const std::uint64_t> squarefree_words() const { return squarefree_; }

  /// Copy restricted to 1..new_max (new_max <= max_n).
  ArithmeticFunctionTable prefix(std::uint64_t new_max) const;

  bool operator==(const ArithmeticFunctionTable&) const = default;

 private:
  ArithmeticFunctionTable() = default;
  void derive_squarefree();

  std::uint64_t max_n_ = 0;
  std::vector<std::uint8_t> big_omega_;
  std::vector<std::uint8_t> small_omega_;
  std::vector<std::int8_t> mobius_;
  std::vector<std::uint64_t> squarefree_;
};

}  // namespace ubseq
