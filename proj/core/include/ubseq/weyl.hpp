#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ubseq/indicator.hpp"
#include "ubseq/parallel.hpp"
#include "ubseq/theta.hpp"

namespace ubseq {

/// Evaluates e(h * a * theta) = exp(2 pi i h a theta) without forming a*theta in
/// floating point. Rational angles use exact residues and a root-of-unity table;
/// fixed-point angles use wrapping 128-bit multiplication.
class PhaseEvaluator {
 public:
  explicit PhaseEvaluator(const Theta& theta, std::uint64_t harmonic = 1);

  /// Fractional part of h * a * theta as a 128-bit fraction (exact for fixed-point
  /// angles, correctly rounded residue r/q for rational ones).
  u128 phase(std::uint64_t a) const;

  /// exp(2 pi i h a theta).
  std::complex<double> operator()(std::uint64_t a) const;

 private:
  bool rational_;
  std::uint64_t p_ = 0;
  std::uint64_t q_ = 1;
  u128 frac_ = 0;
  std::vector<std::complex<double>> roots_;
};

struct WeylPoint {
  std::uint64_t n = 0;
  std::complex<double> value;

  bool operator==(const WeylPoint&) const = default;
};

/// Checkpointed averages (1/N) sum_{n<=N} e(a_n theta).
struct WeylSeries {
  std::vector<WeylPoint> checkpoints;
  Theta theta = Theta::rational(0, 1);
  std::string sequence_label;
};

/// values[n-1] = a_n. The last checkpoint must not exceed values.size().
WeylSeries weyl_series(std::span<const std::uint64_t> values, const Theta& theta,
                       std::span<const std::uint64_t> checkpoints, Parallelism par = {},
                       std::string label = {});

/// (1/N) sum_{n<=N, mask(n)} e(a_n theta), normalised by N rather than by the
/// number of mask hits.
WeylSeries restricted_weyl_series(std::span<const std::uint64_t> values,
                                  const IndicatorSequence& mask, const Theta& theta,
                                  std::span<const std::uint64_t> checkpoints, Parallelism par = {},
                                  std::string label = {});

/// Farey fractions of the given order in [0, 1) followed by `offsets` equally
/// spaced fixed-point angles k/offsets + golden/2 (mod 1).
std::vector<Theta> default_theta_grid(unsigned farey_order = 32, unsigned offsets = 256);

struct SupPoint {
  std::uint64_t n = 0;
  double sup = 0.0;
  Theta argmax = Theta::rational(0, 1);
};

/// For each N in `ns`: max over the grid of |sum_{n<=N} c_n e(n theta)| (not
/// normalised) and the first grid angle attaining it. Weights must be +1 or -1.
std::vector<SupPoint> sup_profile(std::span<const std::int8_t> weights, std::span<const Theta> grid,
                                  std::span<const std::uint64_t> ns, Parallelism par = {});

/// Single-N convenience overload.
SupPoint sup_profile(std::span<const std::int8_t> weights, std::span<const Theta> grid,
                     std::uint64_t N, Parallelism par = {});

}  // namespace ubseq
