#include "ubseq/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ubseq/error.hpp"
#include "ubseq/summation.hpp"

namespace ubseq {

namespace {

constexpr std::uint64_t kMaxRootTable = std::uint64_t{1} << 20;
constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_root(std::uint64_t k, std::uint64_t q) {
  const long double angle = kTwoPiL * static_cast<long double>(k) / static_cast<long double>(q);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::complex<double> unit_phase(u128 frac) {
  const double angle = kTwoPi * unit_fraction(frac);
  return {std::cos(angle), std::sin(angle)};
}

void check_range(std::span<const std::uint64_t> checkpoints, std::size_t available) {
  if (checkpoints.empty()) throw ValidationError("no checkpoints given");
  if (checkpoints.front() == 0) throw ValidationError("checkpoints must be positive");
  if (checkpoints.back() > available) {
    throw ValidationError("checkpoint " + std::to_string(checkpoints.back()) + " exceeds the " +
                          std::to_string(available) + " available terms");
  }
}

template <class Term>
WeylSeries finish(std::span<const std::uint64_t> checkpoints, Term term, const Theta& theta,
                  Parallelism par, std::string label) {
  const auto sums = checkpoint_sums<std::complex<double>>(checkpoints, term, par);
  WeylSeries out;
  out.theta = theta;
  out.sequence_label = std::move(label);
  out.checkpoints.reserve(sums.size());
  for (std::size_t j = 0; j < sums.size(); ++j) {
    const double n = static_cast<double>(checkpoints[j]);
    out.checkpoints.push_back({checkpoints[j], {sums[j].real() / n, sums[j].imag() / n}});
  }
  return out;
}

}  // namespace

PhaseEvaluator::PhaseEvaluator(const Theta& theta, std::uint64_t harmonic)
    : rational_(theta.is_rational()) {
  if (rational_) {
    q_ = theta.denominator();
    p_ = static_cast<std::uint64_t>(static_cast<u128>(harmonic % q_) * theta.numerator() % q_);
    if (q_ <= kMaxRootTable) {
      roots_.resize(q_);
      for (std::uint64_t k = 0; k < q_; ++k) roots_[k] = unit_root(k, q_);
    }
  } else {
    frac_ = theta.to_fixed() * static_cast<u128>(harmonic);
  }
}

u128 PhaseEvaluator::phase(std::uint64_t a) const {
  if (!rational_) return frac_ * static_cast<u128>(a);
  const auto r = static_cast<std::uint64_t>(static_cast<u128>(a % q_) * p_ % q_);
  return Theta::rational(r, q_).to_fixed();
}

std::complex<double> PhaseEvaluator::operator()(std::uint64_t a) const {
  if (!rational_) return unit_phase(frac_ * static_cast<u128>(a));
  const auto r = static_cast<std::uint64_t>(static_cast<u128>(a % q_) * p_ % q_);
  return roots_.empty() ? unit_root(r, q_) : roots_[r];
}

WeylSeries weyl_series(std::span<const std::uint64_t> values, const Theta& theta,
                       std::span<const std::uint64_t> checkpoints, Parallelism par,
                       std::string label) {
  check_range(checkpoints, values.size());
  const PhaseEvaluator e(theta);
  auto term = [&](std::uint64_t i) { return e(values[i]); };
  return finish(checkpoints, term, theta, par, std::move(label));
}

WeylSeries restricted_weyl_series(std::span<const std::uint64_t> values,
                                  const IndicatorSequence& mask, const Theta& theta,
                                  std::span<const std::uint64_t> checkpoints, Parallelism par,
                                  std::string label) {
  check_range(checkpoints, values.size());
  if (mask.max_n() < checkpoints.back()) {
    throw ValidationError("mask '" + mask.name() + "' covers only [1, " +
                          std::to_string(mask.max_n()) + "]");
  }
  const PhaseEvaluator e(theta);
  auto term = [&](std::uint64_t i) {
    return mask.contains(i + 1) ? e(values[i]) : std::complex<double>{};
  };
  return finish(checkpoints, term, theta, par, std::move(label));
}

std::vector<Theta> default_theta_grid(unsigned farey_order, unsigned offsets) {
  if (farey_order == 0) throw ValidationError("Farey order must be positive");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> fractions;
  for (std::uint64_t q = 1; q <= farey_order; ++q) {
    for (std::uint64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) == 1) fractions.emplace_back(p, q);
    }
  }
  std::sort(fractions.begin(), fractions.end(), [](const auto& x, const auto& y) {
    return static_cast<u128>(x.first) * y.second < static_cast<u128>(y.first) * x.second;
  });
  std::vector<Theta> grid;
  grid.reserve(fractions.size() + offsets);
  for (const auto& [p, q] : fractions) grid.push_back(Theta::rational(p, q));
  const u128 shift = golden_fraction() >> 1;
  for (unsigned k = 0; k < offsets; ++k) {
    grid.push_back(Theta::fixed(Theta::rational(k, offsets).to_fixed() + shift));
  }
  return grid;
}

std::vector<SupPoint> sup_profile(std::span<const std::int8_t> weights, std::span<const Theta> grid,
                                  std::span<const std::uint64_t> ns, Parallelism par) {
  if (grid.empty()) throw ValidationError("sup_profile needs a non-empty angle grid");
  check_range(ns, weights.size());
  for (std::size_t j = 1; j < ns.size(); ++j) {
    if (ns[j] <= ns[j - 1]) throw ValidationError("sup_profile sizes must be increasing");
  }
  const std::uint64_t total = ns.back();
  for (std::uint64_t i = 0; i < total; ++i) {
    if (weights[i] != 1 && weights[i] != -1) {
      throw ValidationError("sup_profile weights must be +1 or -1 (index " + std::to_string(i + 1) +
                            ")");
    }
  }

  // magnitude[g * ns.size() + j] = |sum_{n <= ns[j]} c_n e(n theta_g)|
  std::vector<double> magnitude(grid.size() * ns.size());
  constexpr std::uint64_t kReanchor = 512;
  parallel_for(grid.size(), par, [&](std::size_t g) {
    const PhaseEvaluator e(grid[g]);
    const std::complex<double> step = e(1);
    std::complex<double> sum{};
    std::complex<double> z{};
    std::size_t next = 0;
    for (std::uint64_t n = 1; n <= total; ++n) {
      z = (n % kReanchor == 1) ? e(n) : z * step;
      sum += static_cast<double>(weights[n - 1]) * z;
      if (n == ns[next]) {
        magnitude[g * ns.size() + next] = std::abs(sum);
        ++next;
      }
    }
  });

  std::vector<SupPoint> out(ns.size());
  for (std::size_t j = 0; j < ns.size(); ++j) {
    out[j].n = ns[j];
    out[j].sup = -1.0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double m = magnitude[g * ns.size() + j];
      if (m > out[j].sup) {
        out[j].sup = m;
        out[j].argmax = grid[g];
      }
    }
  }
  return out;
}

SupPoint sup_profile(std::span<const std::int8_t> weights, std::span<const Theta> grid,
                     std::uint64_t N, Parallelism par) {
  const std::uint64_t ns[] = {N};
  return sup_profile(weights, grid, ns, par).front();
}

}  // namespace ubseq
