#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ubseq/indicator.hpp"
#include "ubseq/parallel.hpp"
#include "ubseq/series.hpp"
#include "ubseq/sieve.hpp"
#include "ubseq/theta.hpp"

namespace ubseq {

/// Star discrepancy D*_N of points in [0, 1).
double discrepancy_star(std::span<const double> points);

struct RdReport {
  Theta theta = Theta::rational(0, 1);
  /// |(1/N) sum e(h a_n theta)| for h = 1..h_max.
  std::vector<double> abs_average;
  double star_discrepancy = 0.0;
  bool pass = false;
};

/// Weyl-criterion test of (a_n theta) mod 1 for fixed-point angles. A report
/// passes when every harmonic average is below `tolerance`. Rational angles are
/// rejected with ValidationError.
std::vector<RdReport> rd_test(std::span<const std::uint64_t> values, std::span<const Theta> thetas,
                              std::uint64_t N, double tolerance, unsigned h_max = 3,
                              Parallelism par = {});

struct DensityReport {
  std::uint64_t n = 0;
  std::uint64_t modulus = 0;
  std::vector<double> densities;
};

/// #{n <= N : a_n = r (mod m)} / N for every residue r, at each checkpoint.
std::vector<DensityReport> residue_densities(std::span<const std::uint64_t> values,
                                             std::uint64_t modulus,
                                             std::span<const std::uint64_t> checkpoints);

struct DensitySeries {
  std::vector<SeriesPoint> series;
  /// Max and min of count/N over the tail half of the checkpoints.
  double upper = 0.0;
  double lower = 0.0;
};

/// count(E and [1, N]) / N at each checkpoint.
DensitySeries densities(const IndicatorSequence& set, std::span<const std::uint64_t> checkpoints);

/// #{n <= N : a_n in E} / N, counting repeated values with multiplicity. Throws
/// ValidationError when a counted a_n exceeds E.max_n().
DensitySeries a_density(std::span<const std::uint64_t> values, const IndicatorSequence& set,
                        std::span<const std::uint64_t> checkpoints);

struct DadCheck {
  double lhs = 0.0;  // upper a-density of E
  double rhs = 0.0;  // upper density of E over lower density of a
  bool holds = false;
};

/// Finite-N form of: upper a-density of E <= upper density of E / lower density of a,
/// using tail-half estimates over the geometric checkpoint schedule and `slack`.
DadCheck prop_dad_check(const Subsequence& a, const IndicatorSequence& set, std::uint64_t N,
                        double slack = 0.02);

struct PanelPoint {
  std::uint64_t n = 0;
  double liouville_mean = 0.0;
  double mertens_mean = 0.0;
  double pnt_ratio = 0.0;
};

/// Liouville mean, Mertens mean and pi(N) ln N / N at each checkpoint.
std::vector<PanelPoint> number_theory_panel(const ArithmeticFunctionTable& table,
                                            std::span<const std::uint64_t> checkpoints);

struct TransferCheck {
  std::complex<double> indicator_side;    // sum_{n <= a_N} t_n e(n theta)
  std::complex<double> subsequence_side;  // sum_{k <= N} e(a_k theta)
  double deviation = 0.0;
};

/// Both sides of the exact identity relating sums over the first N members of a
/// set to indicator-weighted sums up to a_N.
TransferCheck finite_transfer_identity_check(const IndicatorSequence& ind, const Theta& theta,
                                             std::uint64_t N);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares of log(value) against log(N). Needs at least 4 points, all positive.
RateFit rate_fit(std::span<const std::pair<double, double>> points);

}  // namespace ubseq
