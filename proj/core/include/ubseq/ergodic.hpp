#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ubseq/dynsys.hpp"
#include "ubseq/indicator.hpp"
#include "ubseq/parallel.hpp"
#include "ubseq/series.hpp"

namespace ubseq {

/// Checkpointed time averages S_N = (1/N) sum_{n<=N} phi(f^{a_n} x).
struct AverageSeries {
  std::vector<SeriesPoint> points;
  std::string flow_label;
  std::string observable_label;
  std::string sequence_label;
  std::string start_label;
};

struct ConvergenceReport {
  double target = 0.0;
  std::vector<SeriesPoint> residuals;  // |S_N - target|
  double final_residual = 0.0;
  /// final residual < first residual
  bool monotone_improvement = false;
};

/// a_values[n-1] = a_n; the last checkpoint must not exceed a_values.size().
AverageSeries time_average_series(const FlowDescriptor& flow, const Observable& obs,
                                  const FlowPoint& x, std::span<const std::uint64_t> a_values,
                                  std::span<const std::uint64_t> checkpoints, Parallelism par = {},
                                  std::string sequence_label = {});

/// Same sum restricted to n with mask(n) set, still normalised by N.
AverageSeries masked_time_average_series(const FlowDescriptor& flow, const Observable& obs,
                                         const FlowPoint& x, std::span<const std::uint64_t> a_values,
                                         const IndicatorSequence& mask,
                                         std::span<const std::uint64_t> checkpoints,
                                         Parallelism par = {}, std::string sequence_label = {});

/// Throws ValidationError on an empty series.
ConvergenceReport convergence_report(const AverageSeries& series, double target);

/// (1/N) sum_{n<=N} c_n phi(f^n x), weights[n-1] = c_n.
AverageSeries linear_disjointness_series(std::span<const std::int8_t> weights,
                                         const FlowDescriptor& flow, const Observable& obs,
                                         const FlowPoint& x,
                                         std::span<const std::uint64_t> checkpoints,
                                         Parallelism par = {}, std::string weight_label = {});

struct DisjointnessIdentity {
  double lhs = 0.0;  // (1/N) sum over members n <= N of phi(f^n x)
  double rhs = 0.0;  // (1/2N) sum c_n phi(f^n x) + (1/2N) sum phi(f^n x), c = 2t - 1
  double deviation = 0.0;
};

/// Both sides of the exact splitting identity for the indicator of `set` up to N.
DisjointnessIdentity disjointness_identity_check(const IndicatorSequence& set,
                                                 const FlowDescriptor& flow, const Observable& obs,
                                                 const FlowPoint& x, std::uint64_t N);

}  // namespace ubseq
