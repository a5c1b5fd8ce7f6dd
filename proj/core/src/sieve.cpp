#include "ubseq/sieve.hpp"

#include <string>

#include "ubseq/error.hpp"

namespace ubseq {

std::uint64_t ArithmeticFunctionTable::estimated_bytes(std::uint64_t max_n) {
  // Omega, omega, mu (1 byte each), square-free bits, 4-byte smallest factor scratch,
  // and roughly max_n / ln(max_n) primes of 4 bytes.
  const std::uint64_t slots = max_n + 1;
  return slots * 3 + slots / 8 + slots * 4 + slots / 4;
}

ArithmeticFunctionTable ArithmeticFunctionTable::build(std::uint64_t max_n,
                                                       std::uint64_t memory_budget) {
  if (max_n < 2 || max_n > kMaxSieveN) {
    throw ValidationError("sieve size must satisfy 2 <= max_n <= 2^32, got " +
                          std::to_string(max_n));
  }
  if (estimated_bytes(max_n) > memory_budget) {
    throw CapacityError("sieve of size " + std::to_string(max_n) + " needs about " +
                        std::to_string(estimated_bytes(max_n) >> 20) + " MiB, budget is " +
                        std::to_string(memory_budget >> 20) + " MiB");
  }

  ArithmeticFunctionTable t;
  t.max_n_ = max_n;
  t.big_omega_.assign(max_n + 1, 0);
  t.small_omega_.assign(max_n + 1, 0);
  t.mobius_.assign(max_n + 1, 0);
  t.mobius_[1] = 1;

  std::vector<std::uint32_t> spf(max_n + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= max_n; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
      t.big_omega_[i] = 1;
      t.small_omega_[i] = 1;
      t.mobius_[i] = -1;
    }
    const std::uint32_t lp = spf[i];
    for (const std::uint32_t p : primes) {
      const std::uint64_t n = i * p;
      if (p > lp || n > max_n) break;
      spf[n] = p;
      t.big_omega_[n] = static_cast<std::uint8_t>(t.big_omega_[i] + 1);
      if (p == lp) {
        t.small_omega_[n] = t.small_omega_[i];
        t.mobius_[n] = 0;
      } else {
        t.small_omega_[n] = static_cast<std::uint8_t>(t.small_omega_[i] + 1);
        t.mobius_[n] = static_cast<std::int8_t>(-t.mobius_[i]);
      }
    }
  }
  t.derive_squarefree();
  return t;
}

void ArithmeticFunctionTable::derive_squarefree() {
  squarefree_.assign(max_n_ / 64 + 1, 0);
  for (std::uint64_t n = 1; n <= max_n_; ++n) {
    if (mobius_[n] != 0) squarefree_[n >> 6] |= std::uint64_t{1} << (n & 63);
  }
}

ArithmeticFunctionTable ArithmeticFunctionTable::from_arrays(
    std::vector<std::uint8_t> big_omega, std::vector<std::uint8_t> small_omega,
    std::vector<std::int8_t> mobius, std::span<const std::uint8_t> squarefree_bits) {
  if (big_omega.size() < 2 || small_omega.size() != big_omega.size() ||
      mobius.size() != big_omega.size()) {
    throw ValidationError("arithmetic function arrays must share a length of at least 2");
  }
  ArithmeticFunctionTable t;
  t.max_n_ = big_omega.size() - 1;
  t.big_omega_ = std::move(big_omega);
  t.small_omega_ = std::move(small_omega);
  t.mobius_ = std::move(mobius);
  t.big_omega_[0] = 0;
  t.small_omega_[0] = 0;
  t.mobius_[0] = 0;
  t.derive_squarefree();
  if (!squarefree_bits.empty()) {
    if (squarefree_bits.size() * 8 < t.max_n_) {
      throw ValidationError("square-free bitset shorter than the table");
    }
    for (std::uint64_t n = 1; n <= t.max_n_; ++n) {
      const bool stored = (squarefree_bits[(n - 1) >> 3] >> ((n - 1) & 7)) & 1u;
      if (stored != t.squarefree(n)) {
        throw ValidationError("square-free bitset disagrees with Moebius at n=" +
                              std::to_string(n));
      }
    }
  }
  return t;
}

ArithmeticFunctionTable ArithmeticFunctionTable::prefix(std::uint64_t new_max) const {
  if (new_max < 2 || new_max > max_n_) {
    throw ValidationError("prefix size " + std::to_string(new_max) + " outside [2, " +
                          std::to_string(max_n_) + "]");
  }
  if (new_max == max_n_) return *this;
  ArithmeticFunctionTable t;
  t.max_n_ = new_max;
  t.big_omega_.assign(big_omega_.begin(), big_omega_.begin() + new_max + 1);
  t.small_omega_.assign(small_omega_.begin(), small_omega_.begin() + new_max + 1);
  t.mobius_.assign(mobius_.begin(), mobius_.begin() + new_max + 1);
  t.derive_squarefree();
  return t;
}

}  // namespace ubseq
