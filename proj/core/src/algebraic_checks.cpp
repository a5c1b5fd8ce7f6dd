#include "ubseq/algebraic_checks.hpp"

#include <numeric>

#include "ubseq/error.hpp"
#include "ubseq/rng.hpp"

namespace ubseq {

namespace {

template <class Law>
LawReport sample_law(const ValueAccessor& values, std::uint64_t max_n, std::uint64_t trials,
                     std::uint64_t seed, PairSampling sampling, Law&& holds) {
  if (max_n < 1) throw ValidationError("law check needs max_n >= 1");
  LawReport report;
  SplitMix64 rng(seed);
  // Coprime sampling rejects pairs; cap attempts so a pathological range cannot spin.
  const std::uint64_t max_attempts = trials * 64 + 64;
  for (std::uint64_t attempt = 0; report.trials < trials && attempt < max_attempts; ++attempt) {
    const std::uint64_t m = 1 + rng.below(max_n);
    const std::uint64_t n = 1 + rng.below(max_n / m);
    if (sampling == PairSampling::Coprime && std::gcd(m, n) != 1) continue;
    ++report.trials;
    if (!holds(values(m * n), values(m), values(n))) {
      ++report.violations;
      if (report.witnesses.size() < kMaxWitnesses) report.witnesses.emplace_back(m, n);
    }
  }
  return report;
}

}  // namespace

LawReport additivity_check(const ValueAccessor& values, std::uint64_t max_n, std::uint64_t trials,
                           std::uint64_t seed, PairSampling sampling) {
  return sample_law(values, max_n, trials, seed, sampling,
                    [](std::uint64_t amn, std::uint64_t am, std::uint64_t an) { return amn == am + an; });
}

LawReport multiplicativity_check(const ValueAccessor& values, std::uint64_t max_n,
                                 std::uint64_t trials, std::uint64_t seed, PairSampling sampling) {
  return sample_law(values, max_n, trials, seed, sampling,
                    [](std::uint64_t amn, std::uint64_t am, std::uint64_t an) { return amn == am * an; });
}

}  // namespace ubseq
