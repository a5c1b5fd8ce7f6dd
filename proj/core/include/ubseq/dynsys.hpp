#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ubseq/int128.hpp"
#include "ubseq/parallel.hpp"

namespace ubseq {

enum class Part { Re, Im };
enum class Side { Left, Right };

namespace flow {

/// Rigid rotation y -> y + rho on R/Z.
struct Rotation {
  u128 rho;
};

/// x -> x + 1 (mod q) on q points.
struct Cyclic {
  std::uint64_t q;
};

/// Dyadic adding machine truncated to `depth` binary digits.
struct Odometer {
  unsigned depth;
};

/// Denjoy homeomorphism restricted to its minimal Cantor set.
///
/// The circle is cut open at the orbit points frac(k rho), |k| <= K, and a gap
/// of length G * 2^-|k| / 3 is inserted at each. A point of the Cantor set is
/// named by its base angle y on the rotation circle plus, at a cut point, the
/// side of the gap it sits on. The embedding into the circle is
///
///   Phi(y, side) = (1 - G) y + sum of lengths of gaps cut strictly before y
///                  (plus the gap at y itself on the right side).
class Denjoy {
 public:
  Denjoy(u128 rho, double gap_ratio, unsigned truncation);

  u128 rho() const { return rho_; }
  double gap_ratio() const { return gap_ratio_; }
  unsigned truncation() const { return truncation_; }

  /// Length of the gap cut at frac(k rho).
  long double gap_length(std::int64_t k) const;

  /// Phi in extended precision, in [0, 1).
  long double embed(u128 base, Side side) const;

 private:
  struct Cuts {
    std::vector<u128> positions;      // sorted cut points
    std::vector<long double> before;  // before[i] = total gap length of cuts 0..i-1
  };

  u128 rho_;
  double gap_ratio_;
  unsigned truncation_;
  std::shared_ptr<const Cuts> cuts_;
};

}  // namespace flow

using FlowDescriptor = std::variant<flow::Rotation, flow::Cyclic, flow::Odometer, flow::Denjoy>;

namespace point {
struct Circle {
  u128 angle;
  bool operator==(const Circle&) const = default;
};
struct Cyclic {
  std::uint64_t state;
  bool operator==(const Cyclic&) const = default;
};
/// Bit j holds digit i_j of w = i_0 i_1 ...
struct Odometer {
  std::uint64_t word;
  bool operator==(const Odometer&) const = default;
};
struct Denjoy {
  u128 base;
  Side side;
  bool operator==(const Denjoy&) const = default;
};
}  // namespace point

using FlowPoint = std::variant<point::Circle, point::Cyclic, point::Odometer, point::Denjoy>;

namespace obs {
/// cos or sin of 2 pi h y on circle coordinates.
struct Harmonic {
  std::int64_t h;
  Part part;
};
/// Indicator of the cylinder [w]_k: the first `depth` digits equal `word`.
struct Cylinder {
  std::uint64_t word;
  unsigned depth;
};
struct StateIndicator {
  std::uint64_t r;
};
/// Harmonic evaluated at the embedded Denjoy point.
struct DenjoyHarmonic {
  std::int64_t h;
  Part part;
};
}  // namespace obs

using Observable = std::variant<obs::Harmonic, obs::Cylinder, obs::StateIndicator, obs::DenjoyHarmonic>;

struct ProbeReport {
  double delta = 0.0;
  double epsilon = 0.0;
  std::uint64_t pairs_tested = 0;
  double worst_exceptional_density = 0.0;
  double worst_mean_distance = 0.0;
};

/// f^n(x), using a closed form per system (no repeated composition).
FlowPoint iterate(const FlowDescriptor& flow, const FlowPoint& x, std::uint64_t n);

/// Throws ValidationError unless `obs` is defined on the phase space of `flow`.
void check_compatible(const FlowDescriptor& flow, const Observable& obs);

double observe(const FlowDescriptor& flow, const Observable& obs, const FlowPoint& x);

/// Integral of the observable against the unique invariant probability measure.
double space_average(const FlowDescriptor& flow, const Observable& obs);

/// Embedding of a Denjoy point into the circle, in [0, 1).
double denjoy_embed(const flow::Denjoy& flow, const point::Denjoy& x);

/// f(Phi(x)) computed from the shifted gap family (independent of Phi(f(x))).
double denjoy_map_image(const flow::Denjoy& flow, const point::Denjoy& x);

double metric(const FlowDescriptor& flow, const FlowPoint& x, const FlowPoint& y);

/// Worst fraction of n <= N with d(f^{a_n} x, f^{a_n} y) >= epsilon over `pairs`
/// random pairs at distance < delta. Also reports the worst mean distance.
ProbeReport mls_probe(const FlowDescriptor& flow, std::span<const std::uint64_t> a_values,
                      double delta, double epsilon, std::uint64_t pairs, std::uint64_t N,
                      std::uint64_t seed, Parallelism par = {});

/// Worst (1/N) sum d(f^{a_n} x, f^{a_n} y) over random pairs at distance < delta.
ProbeReport meq_probe(const FlowDescriptor& flow, std::span<const std::uint64_t> a_values,
                      double delta, std::uint64_t pairs, std::uint64_t N, std::uint64_t seed,
                      Parallelism par = {});

/// (1/N) sum_{n <= N} d(f^{a_n} x, f^{a_n} z).
double mean_attraction(const FlowDescriptor& flow, const FlowPoint& x, const FlowPoint& z,
                       std::span<const std::uint64_t> a_values, std::uint64_t N);

/// Random pair (x, y) with d(x, y) < delta, deterministic in (seed, index).
std::pair<FlowPoint, FlowPoint> sample_close_pair(const FlowDescriptor& flow, double delta,
                                                  std::uint64_t seed, std::uint64_t index);

/// Uniform point under the invariant measure, deterministic in (seed, index).
FlowPoint sample_point(const FlowDescriptor& flow, std::uint64_t seed, std::uint64_t index);

/// "rotation[:<angle>]", "cyclic:<q>", "odometer[:<depth>]", "denjoy[:<angle>:<G>:<K>]".
FlowDescriptor parse_flow(std::string_view text);
/// "harm:<h>:re|im", "cyl:<bits>", "state:<r>", "denharm:<h>:re|im".
Observable parse_observable(std::string_view text);
/// Start point text for the given flow; empty selects default_start.
FlowPoint parse_point(const FlowDescriptor& flow, std::string_view text);
/// Rotation angle 0, cyclic state 0, all-zero odometer word, Denjoy (0, left).
FlowPoint default_start(const FlowDescriptor& flow);

std::string to_string(const FlowDescriptor& flow);
std::string to_string(const Observable& obs);
std::string to_string(const FlowPoint& x);

}  // namespace ubseq
