#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace ubseq {

/// n -> a_n on [1, max_n].
using ValueAccessor = std::function<std::uint64_t(std::uint64_t)>;

enum class PairSampling {
  Any,      // m, n arbitrary with mn <= max_n
  Coprime,  // only coprime pairs are kept
};

struct LawReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  /// First few violating (m, n) pairs, in sampling order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses;
};

inline constexpr std::size_t kMaxWitnesses = 16;

/// Samples (m, n) with mn <= max_n and counts a_{mn} != a_m + a_n.
LawReport additivity_check(const ValueAccessor& values, std::uint64_t max_n, std::uint64_t trials,
                           std::uint64_t seed, PairSampling sampling = PairSampling::Any);

/// Samples (m, n) with mn <= max_n and counts a_{mn} != a_m * a_n.
LawReport multiplicativity_check(const ValueAccessor& values, std::uint64_t max_n,
                                 std::uint64_t trials, std::uint64_t seed,
                                 PairSampling sampling = PairSampling::Any);

}  // namespace ubseq
