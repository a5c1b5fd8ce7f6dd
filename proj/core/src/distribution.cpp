#include "ubseq/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ubseq/error.hpp"
#include "ubseq/summation.hpp"
#include "ubseq/weyl.hpp"

namespace ubseq {

namespace {

void require_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t available,
                         const char* what) {
  if (checkpoints.empty()) throw ValidationError("no checkpoints given");
  if (checkpoints.front() == 0) throw ValidationError("checkpoints must be positive");
  for (std::size_t j = 1; j < checkpoints.size(); ++j) {
    if (checkpoints[j] <= checkpoints[j - 1]) {
      throw ValidationError("checkpoints must be strictly increasing");
    }
  }
  if (checkpoints.back() > available) {
    throw ValidationError(std::string(what) + ": checkpoint " + std::to_string(checkpoints.back()) +
                          " exceeds available range " + std::to_string(available));
  }
}

// Max and min over the tail half of a series.
std::pair<double, double> tail_extremes(const std::vector<SeriesPoint>& series) {
  double hi = -1.0;
  double lo = 2.0;
  for (std::size_t j = series.size() / 2; j < series.size(); ++j) {
    hi = std::max(hi, series[j].value);
    lo = std::min(lo, series[j].value);
  }
  return {hi, lo};
}

DensitySeries with_tail(std::vector<SeriesPoint> series) {
  DensitySeries out;
  std::tie(out.upper, out.lower) = tail_extremes(series);
  out.series = std::move(series);
  return out;
}

}  // namespace

double discrepancy_star(std::span<const double> points) {
  if (points.empty()) throw ValidationError("star discrepancy of an empty point set");
  std::vector<double> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double x = sorted[i];
    d = std::max({d, static_cast<double>(i + 1) / n - x, x - static_cast<double>(i) / n});
  }
  return d;
}

std::vector<RdReport> rd_test(std::span<const std::uint64_t> values, std::span<const Theta> thetas,
                              std::uint64_t N, double tolerance, unsigned h_max, Parallelism par) {
  if (N == 0 || N > values.size()) {
    throw ValidationError("rd_test: N must lie in [1, " + std::to_string(values.size()) + "]");
  }
  if (h_max == 0) throw ValidationError("rd_test: h_max must be positive");
  for (const Theta& t : thetas) {
    if (t.is_rational()) {
      throw ValidationError("rd_test needs fixed-point (irrational surrogate) angles, got " +
                            t.to_string());
    }
  }
  const std::uint64_t cp[] = {N};
  std::vector<RdReport> out;
  for (const Theta& theta : thetas) {
    RdReport report;
    report.theta = theta;
    report.pass = true;
    for (unsigned h = 1; h <= h_max; ++h) {
      const PhaseEvaluator e(theta, h);
      auto term = [&](std::uint64_t i) { return e(values[i]); };
      const auto sum = checkpoint_sums<std::complex<double>>(cp, term, par).front();
      const double avg = std::abs(sum) / static_cast<double>(N);
      report.abs_average.push_back(avg);
      if (!(avg < tolerance)) report.pass = false;
    }
    const PhaseEvaluator e(theta);
    std::vector<double> points(N);
    for (std::uint64_t i = 0; i < N; ++i) points[i] = unit_fraction(e.phase(values[i]));
    report.star_discrepancy = discrepancy_star(points);
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<DensityReport> residue_densities(std::span<const std::uint64_t> values,
                                             std::uint64_t modulus,
                                             std::span<const std::uint64_t> checkpoints) {
  if (modulus < 2) throw ValidationError("residue densities need modulus >= 2");
  require_checkpoints(checkpoints, values.size(), "residue_densities");
  std::vector<std::uint64_t> counts(modulus, 0);
  std::vector<DensityReport> out;
  std::uint64_t n = 0;
  for (const std::uint64_t cp : checkpoints) {
    for (; n < cp; ++n) ++counts[values[n] % modulus];
    DensityReport row;
    row.n = cp;
    row.modulus = modulus;
    row.densities.resize(modulus);
    for (std::uint64_t r = 0; r < modulus; ++r) {
      row.densities[r] = static_cast<double>(counts[r]) / static_cast<double>(cp);
    }
    out.push_back(std::move(row));
  }
  return out;
}

DensitySeries densities(const IndicatorSequence& set, std::span<const std::uint64_t> checkpoints) {
  require_checkpoints(checkpoints, set.max_n(), "densities");
  std::vector<SeriesPoint> series;
  std::uint64_t count = 0;
  std::uint64_t n = 0;
  for (const std::uint64_t cp : checkpoints) {
    for (; n < cp; ++n) count += set.contains(n + 1) ? 1 : 0;
    series.push_back({cp, static_cast<double>(count) / static_cast<double>(cp)});
  }
  return with_tail(std::move(series));
}

DensitySeries a_density(std::span<const std::uint64_t> values, const IndicatorSequence& set,
                        std::span<const std::uint64_t> checkpoints) {
  require_checkpoints(checkpoints, values.size(), "a_density");
  std::vector<SeriesPoint> series;
  std::uint64_t count = 0;
  std::uint64_t n = 0;
  for (const std::uint64_t cp : checkpoints) {
    for (; n < cp; ++n) {
      const std::uint64_t a = values[n];
      if (a > set.max_n()) {
        throw ValidationError("a_density: a_" + std::to_string(n + 1) + " = " + std::to_string(a) +
                              " exceeds the counted range [1, " + std::to_string(set.max_n()) + "]");
      }
      count += set.contains(a) ? 1 : 0;
    }
    series.push_back({cp, static_cast<double>(count) / static_cast<double>(cp)});
  }
  return with_tail(std::move(series));
}

DadCheck prop_dad_check(const Subsequence& a, const IndicatorSequence& set, std::uint64_t N,
                        double slack) {
  if (N == 0 || a.values.size() < N) {
    throw ValidationError("prop_dad_check: subsequence has fewer than N terms");
  }
  const std::span<const std::uint64_t> terms(a.values.data(), N);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1]) throw ValidationError("prop_dad_check: a must be increasing");
  }
  const std::uint64_t top = terms.back();
  if (set.max_n() < top) {
    throw ValidationError("prop_dad_check: set covers [1, " + std::to_string(set.max_n()) +
                          "] but a_N = " + std::to_string(top));
  }

  const auto index_cps = geometric_checkpoints(N);
  const double lhs = a_density(terms, set, index_cps).upper;

  const auto range_cps = geometric_checkpoints(top);
  const double upper_set = densities(set, range_cps).upper;
  std::vector<SeriesPoint> a_as_set;
  for (const std::uint64_t m : range_cps) {
    const auto members = std::upper_bound(terms.begin(), terms.end(), m) - terms.begin();
    a_as_set.push_back({m, static_cast<double>(members) / static_cast<double>(m)});
  }
  const double lower_a = tail_extremes(a_as_set).second;
  if (!(lower_a > 0.0)) {
    throw ValidationError("prop_dad_check: lower density estimate of a is zero");
  }
  DadCheck out;
  out.lhs = lhs;
  out.rhs = upper_set / lower_a;
  out.holds = out.lhs <= out.rhs + slack;
  return out;
}

std::vector<PanelPoint> number_theory_panel(const ArithmeticFunctionTable& table,
                                            std::span<const std::uint64_t> checkpoints) {
  require_checkpoints(checkpoints, table.max_n(), "number_theory_panel");
  std::vector<PanelPoint> out;
  std::int64_t liouville = 0;
  std::int64_t mertens = 0;
  std::uint64_t primes = 0;
  std::uint64_t n = 1;
  for (const std::uint64_t cp : checkpoints) {
    for (; n <= cp; ++n) {
      liouville += table.liouville(n);
      mertens += table.mobius(n);
      primes += table.is_prime(n) ? 1 : 0;
    }
    const double size = static_cast<double>(cp);
    out.push_back({cp, static_cast<double>(liouville) / size, static_cast<double>(mertens) / size,
                   static_cast<double>(primes) * std::log(size) / size});
  }
  return out;
}

TransferCheck finite_transfer_identity_check(const IndicatorSequence& ind, const Theta& theta,
                                             std::uint64_t N) {
  if (N == 0) throw ValidationError("transfer identity needs N >= 1");
  std::vector<std::uint64_t> members;
  members.reserve(N);
  for (std::uint64_t n = 1; n <= ind.max_n() && members.size() < N; ++n) {
    if (ind.contains(n)) members.push_back(n);
  }
  if (members.size() < N) {
    throw ValidationError("indicator '" + ind.name() + "' has fewer than " + std::to_string(N) +
                          " members");
  }
  const std::uint64_t top = members.back();
  const PhaseEvaluator e(theta);

  // Indicator side through t = (c + 1) / 2 with c = 2t - 1.
  KahanSum<std::complex<double>> signed_sum;
  KahanSum<std::complex<double>> plain_sum;
  for (std::uint64_t n = 1; n <= top; ++n) {
    const std::complex<double> z = e(n);
    signed_sum.add(ind.contains(n) ? z : -z);
    plain_sum.add(z);
  }
  KahanSum<std::complex<double>> listing_sum;
  for (const std::uint64_t a : members) listing_sum.add(e(a));

  TransferCheck out;
  out.indicator_side = 0.5 * signed_sum.value() + 0.5 * plain_sum.value();
  out.subsequence_side = listing_sum.value();
  out.deviation = std::abs(out.indicator_side - out.subsequence_side);
  return out;
}

RateFit rate_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 4) throw ValidationError("rate_fit needs at least 4 points");
  double sx = 0, sy = 0;
  for (const auto& [n, v] : points) {
    if (!(n > 0.0) || !(v > 0.0)) throw ValidationError("rate_fit needs positive N and values");
    sx += std::log(n);
    sy += std::log(v);
  }
  const double k = static_cast<double>(points.size());
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [n, v] : points) {
    const double dx = std::log(n) - mx;
    const double dy = std::log(v) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw ValidationError("rate_fit needs at least two distinct N");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return fit;
}

}  // namespace ubseq
