#include "ubseq/ergodic.hpp"

#include <cmath>

#include "ubseq/error.hpp"
#include "ubseq/summation.hpp"

namespace ubseq {

namespace {

void check_length(std::span<const std::uint64_t> checkpoints, std::uint64_t available,
                  const char* what) {
  if (checkpoints.empty()) throw ValidationError("no checkpoints given");
  if (checkpoints.front() == 0) throw ValidationError("checkpoints must be positive");
  if (checkpoints.back() > available) {
    throw ValidationError(std::string(what) + " has " + std::to_string(available) +
                          " terms, fewer than the last checkpoint " +
                          std::to_string(checkpoints.back()));
  }
}

template <class Term>
AverageSeries average_of(const FlowDescriptor& flow, const Observable& obs, const FlowPoint& x,
                         std::span<const std::uint64_t> checkpoints, Term term, Parallelism par,
                         std::string label) {
  const auto sums = checkpoint_sums<double>(checkpoints, term, par);
  AverageSeries out;
  out.points.reserve(sums.size());
  for (std::size_t j = 0; j < sums.size(); ++j) {
    out.points.push_back({checkpoints[j], sums[j] / static_cast<double>(checkpoints[j])});
  }
  out.flow_label = to_string(flow);
  out.observable_label = to_string(obs);
  out.sequence_label = std::move(label);
  out.start_label = to_string(x);
  return out;
}

}  // namespace

AverageSeries time_average_series(const FlowDescriptor& flow, const Observable& obs,
                                  const FlowPoint& x, std::span<const std::uint64_t> a_values,
                                  std::span<const std::uint64_t> checkpoints, Parallelism par,
                                  std::string sequence_label) {
  check_compatible(flow, obs);
  metric(flow, x, x);
  check_length(checkpoints, a_values.size(), "sequence");
  auto term = [&](std::uint64_t i) { return observe(flow, obs, iterate(flow, x, a_values[i])); };
  return average_of(flow, obs, x, checkpoints, term, par, std::move(sequence_label));
}

AverageSeries masked_time_average_series(const FlowDescriptor& flow, const Observable& obs,
                                         const FlowPoint& x, std::span<const std::uint64_t> a_values,
                                         const IndicatorSequence& mask,
                                         std::span<const std::uint64_t> checkpoints,
                                         Parallelism par, std::string sequence_label) {
  check_compatible(flow, obs);
  metric(flow, x, x);
  check_length(checkpoints, a_values.size(), "sequence");
  check_length(checkpoints, mask.max_n(), "mask");
  auto term = [&](std::uint64_t i) {
    return mask.contains(i + 1) ? observe(flow, obs, iterate(flow, x, a_values[i])) : 0.0;
  };
  return average_of(flow, obs, x, checkpoints, term, par,
                    sequence_label + " masked by " + mask.name());
}

ConvergenceReport convergence_report(const AverageSeries& series, double target) {
  if (series.points.empty()) throw ValidationError("convergence_report: empty series");
  ConvergenceReport report;
  report.target = target;
  report.residuals.reserve(series.points.size());
  for (const auto& p : series.points) report.residuals.push_back({p.n, std::fabs(p.value - target)});
  report.final_residual = report.residuals.back().value;
  report.monotone_improvement = report.final_residual < report.residuals.front().value;
  return report;
}

AverageSeries linear_disjointness_series(std::span<const std::int8_t> weights,
                                         const FlowDescriptor& flow, const Observable& obs,
                                         const FlowPoint& x,
                                         std::span<const std::uint64_t> checkpoints,
                                         Parallelism par, std::string weight_label) {
  check_compatible(flow, obs);
  metric(flow, x, x);
  check_length(checkpoints, weights.size(), "weight sequence");
  auto term = [&](std::uint64_t i) {
    const int c = weights[i];
    return c == 0 ? 0.0 : c * observe(flow, obs, iterate(flow, x, i + 1));
  };
  return average_of(flow, obs, x, checkpoints, term, par, std::move(weight_label));
}

DisjointnessIdentity disjointness_identity_check(const IndicatorSequence& set,
                                                 const FlowDescriptor& flow, const Observable& obs,
                                                 const FlowPoint& x, std::uint64_t N) {
  check_compatible(flow, obs);
  if (N == 0 || N > set.max_n()) {
    throw ValidationError("identity check needs 1 <= N <= " + std::to_string(set.max_n()));
  }
  KahanSum<double> members, weighted, plain;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double v = observe(flow, obs, iterate(flow, x, n));
    const bool in = set.contains(n);
    if (in) members.add(v);
    weighted.add(in ? v : -v);
    plain.add(v);
  }
  DisjointnessIdentity out;
  const double scale = static_cast<double>(N);
  out.lhs = members.value() / scale;
  out.rhs = 0.5 * weighted.value() / scale + 0.5 * plain.value() / scale;
  out.deviation = std::fabs(out.lhs - out.rhs);
  return out;
}

}  // namespace ubseq
