#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ubseq/error.hpp"
#include "ubseq/parallel.hpp"

namespace ubseq {

/// Terms per reduction chunk. Chunk boundaries are fixed multiples of this
/// value, so the reduction order never depends on the worker count.
inline constexpr std::size_t kChunkSize = std::size_t{1} << 16;

/// Compensated (Kahan) accumulator. Works for double and std::complex<double>.
template <class T>
class KahanSum {
 public:
  void add(const T& x) {
    const T y = x - compensation_;
    const T t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  const T& value() const { return sum_; }

 private:
  T sum_{};
  T compensation_{};
};

/// Pairwise sum of values[lo, hi) with a fixed split at the midpoint.
template <class T>
T pairwise_sum(std::span<const T> values) {
  if (values.empty()) return T{};
  if (values.size() == 1) return values[0];
  const std::size_t mid = values.size() / 2;
  return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

/// Sum of term(i) for i in [begin, end) with compensated accumulation.
template <class T, class Term>
T kahan_range(std::uint64_t begin, std::uint64_t end, Term& term) {
  KahanSum<T> acc;
  for (std::uint64_t i = begin; i < end; ++i) acc.add(term(i));
  return acc.value();
}

/// Prefix sums of term(0), term(1), ... evaluated after `checkpoints[j]` terms.
///
/// Full chunks are reduced with Kahan summation (in parallel), combined with a
/// fixed pairwise tree, and the trailing partial chunk of each checkpoint is
/// added last. Output is bit-identical for any worker count.
template <class T, class Term>
std::vector<T> checkpoint_sums(std::span<const std::uint64_t> checkpoints, Term term,
                               Parallelism par = {}) {
  std::vector<T> out;
  if (checkpoints.empty()) return out;
  for (std::size_t j = 1; j < checkpoints.size(); ++j) {
    if (checkpoints[j] <= checkpoints[j - 1]) {
      throw ValidationError("checkpoints must be strictly increasing");
    }
  }
  const std::uint64_t total = checkpoints.back();
  const std::size_t full_chunks = static_cast<std::size_t>(total / kChunkSize);
  std::vector<T> chunk(full_chunks);
  parallel_for(full_chunks, par, [&](std::size_t c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunkSize;
    chunk[c] = kahan_range<T>(begin, begin + kChunkSize, term);
  });
  out.reserve(checkpoints.size());
  for (const std::uint64_t n : checkpoints) {
    const std::size_t whole = static_cast<std::size_t>(n / kChunkSize);
    const std::uint64_t tail_begin = static_cast<std::uint64_t>(whole) * kChunkSize;
    const T head = pairwise_sum(std::span<const T>(chunk).first(whole));
    const T tail = kahan_range<T>(tail_begin, n, term);
    out.push_back(head + tail);
  }
  return out;
}

}  // namespace ubseq
