#include "ubseq/dynsys.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "ubseq/error.hpp"
#include "ubseq/rng.hpp"
#include "ubseq/summation.hpp"
#include "ubseq/theta.hpp"

namespace ubseq {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;
constexpr unsigned kMaxDenjoyTruncation = 4096;
constexpr std::size_t kDenjoyQuadratureNodes = std::size_t{1} << 16;

[[noreturn]] void kind_mismatch(std::string_view what) {
  throw ValidationError(std::string(what) + ": point or observable does not match the flow kind");
}

std::uint64_t odometer_mask(unsigned depth) {
  return depth >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << depth) - 1;
}

u128 times_signed(u128 x, std::int64_t h) {
  return x * static_cast<u128>(static_cast<__int128>(h));
}

double harmonic_value(long double turns, Part part) {
  turns -= std::floor(turns);
  const long double angle = kTwoPiL * turns;
  return static_cast<double>(part == Part::Re ? std::cos(angle) : std::sin(angle));
}

double harmonic_value(u128 phase, Part part) {
  return harmonic_value(unit_fraction_ld(phase), part);
}

u128 cut_position(u128 rho, std::int64_t k) { return times_signed(rho, k); }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

std::string join(std::span<const std::string_view> parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

u128 parse_angle(std::string_view text) {
  if (text == "0") return 0;
  if (text.starts_with("rat:")) {
    const auto parts = split(text.substr(4), '/');
    if (parts.size() != 2) throw ValidationError("malformed angle '" + std::string(text) + "'");
    return Theta::rational(parse_number<std::uint64_t>(parts[0], "numerator"),
                           parse_number<std::uint64_t>(parts[1], "denominator"))
        .to_fixed();
  }
  return theta_parse(text).to_fixed();
}

std::string angle_label(u128 x) {
  if (x == 0) return "0";
  if (x == golden_fraction()) return "golden";
  if (x == sqrt2m1_fraction()) return "sqrt2m1";
  return "fix:" + to_hex(x);
}

u128 parse_irrational(std::string_view text) {
  const Theta t = theta_parse(text);
  if (t.is_rational()) {
    throw ValidationError("rotation number must be a fixed-point irrational surrogate, got '" +
                          std::string(text) + "'");
  }
  return t.to_fixed();
}

Part parse_part(std::string_view text) {
  if (text == "re") return Part::Re;
  if (text == "im") return Part::Im;
  throw ValidationError("harmonic part must be re or im, got '" + std::string(text) + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// Denjoy geometry

flow::Denjoy::Denjoy(u128 rho, double gap_ratio, unsigned truncation)
    : rho_(rho), gap_ratio_(gap_ratio), truncation_(truncation) {
  if (!(gap_ratio > 0.0 && gap_ratio < 1.0)) {
    throw ValidationError("Denjoy gap ratio must lie in (0, 1)");
  }
  if (truncation == 0 || truncation > kMaxDenjoyTruncation) {
    throw ValidationError("Denjoy truncation must lie in [1, " +
                          std::to_string(kMaxDenjoyTruncation) + "]");
  }
  if (rho == 0) throw ValidationError("Denjoy rotation number must be nonzero");

  std::vector<std::pair<u128, long double>> cuts;
  const auto K = static_cast<std::int64_t>(truncation);
  for (std::int64_t k = -K; k <= K; ++k) cuts.emplace_back(cut_position(rho, k), gap_length(k));
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (cuts[i].first == cuts[i - 1].first) {
      throw ValidationError("Denjoy rotation number is periodic at 128-bit precision");
    }
  }
  auto built = std::make_shared<Cuts>();
  built->positions.reserve(cuts.size());
  built->before.reserve(cuts.size() + 1);
  long double running = 0.0L;
  for (const auto& [pos, len] : cuts) {
    built->positions.push_back(pos);
    built->before.push_back(running);
    running += len;
  }
  built->before.push_back(running);
  cuts_ = std::move(built);
}

long double flow::Denjoy::gap_length(std::int64_t k) const {
  const auto magnitude = static_cast<int>(k < 0 ? -k : k);
  return static_cast<long double>(gap_ratio_) * std::ldexp(1.0L, -magnitude) / 3.0L;
}

long double flow::Denjoy::embed(u128 base, Side side) const {
  const auto& pos = cuts_->positions;
  auto idx = static_cast<std::size_t>(std::lower_bound(pos.begin(), pos.end(), base) - pos.begin());
  if (side == Side::Right && idx < pos.size() && pos[idx] == base) ++idx;
  long double v = (1.0L - gap_ratio_) * unit_fraction_ld(base) + cuts_->before[idx];
  if (v >= 1.0L) v -= 1.0L;
  return v;
}

double denjoy_embed(const flow::Denjoy& flow, const point::Denjoy& x) {
  return static_cast<double>(flow.embed(x.base, x.side));
}

double denjoy_map_image(const flow::Denjoy& flow, const point::Denjoy& x) {
  const u128 rho = flow.rho();
  const auto K = static_cast<std::int64_t>(flow.truncation());
  const long double G = flow.gap_ratio();
  long double v = (1.0L - G) * (unit_fraction_ld(x.base) + unit_fraction_ld(rho));
  // Gap k of the image sits where gap k-1 sat before the rotation.
  for (std::int64_t j = -K - 1; j <= K - 1; ++j) {
    const u128 p = cut_position(rho, j);
    const bool before = p < x.base || (p == x.base && x.side == Side::Right);
    if (before) v += flow.gap_length(j + 1);
  }
  // Gaps whose preimage wraps past 1 under the rotation.
  for (std::int64_t k = -K; k <= K; ++k) {
    const u128 p = cut_position(rho, k - 1);
    if (p + rho < p) v += flow.gap_length(k);
  }
  v -= std::floor(v);
  return static_cast<double>(v);
}

// ---------------------------------------------------------------------------
// Iteration, observation, measure

FlowPoint iterate(const FlowDescriptor& flow, const FlowPoint& x, std::uint64_t n) {
  return std::visit(
      Overloaded{
          [&](const flow::Rotation& f) -> FlowPoint {
            const auto* p = std::get_if<point::Circle>(&x);
            if (!p) kind_mismatch("iterate");
            return point::Circle{p->angle + f.rho * static_cast<u128>(n)};
          },
          [&](const flow::Cyclic& f) -> FlowPoint {
            const auto* p = std::get_if<point::Cyclic>(&x);
            if (!p) kind_mismatch("iterate");
            return point::Cyclic{static_cast<std::uint64_t>(
                (static_cast<u128>(p->state) + n % f.q) % f.q)};
          },
          [&](const flow::Odometer& f) -> FlowPoint {
            const auto* p = std::get_if<point::Odometer>(&x);
            if (!p) kind_mismatch("iterate");
            return point::Odometer{(p->word + n) & odometer_mask(f.depth)};
          },
          [&](const flow::Denjoy& f) -> FlowPoint {
            const auto* p = std::get_if<point::Denjoy>(&x);
            if (!p) kind_mismatch("iterate");
            return point::Denjoy{p->base + f.rho() * static_cast<u128>(n), p->side};
          },
      },
      flow);
}

void check_compatible(const FlowDescriptor& flow, const Observable& obs) {
  const bool ok = std::visit(
      Overloaded{
          [](const flow::Rotation&, const obs::Harmonic& h) { return h.h != 0; },
          [](const flow::Odometer& f, const obs::Cylinder& c) { return c.depth <= f.depth; },
          [](const flow::Cyclic& f, const obs::StateIndicator& s) { return s.r < f.q; },
          [](const flow::Denjoy&, const obs::DenjoyHarmonic& h) { return h.h != 0; },
          [](const auto&, const auto&) { return false; },
      },
      flow, obs);
  if (!ok) {
    throw ValidationError("observable '" + to_string(obs) + "' is not defined on flow '" +
                          to_string(flow) + "'");
  }
}

double observe(const FlowDescriptor& flow, const Observable& obs, const FlowPoint& x) {
  return std::visit(
      Overloaded{
          [](const flow::Rotation&, const obs::Harmonic& h, const point::Circle& p) {
            return harmonic_value(times_signed(p.angle, h.h), h.part);
          },
          [](const flow::Odometer&, const obs::Cylinder& c, const point::Odometer& p) {
            return (p.word & odometer_mask(c.depth)) == c.word ? 1.0 : 0.0;
          },
          [](const flow::Cyclic&, const obs::StateIndicator& s, const point::Cyclic& p) {
            return p.state == s.r ? 1.0 : 0.0;
          },
          [](const flow::Denjoy& f, const obs::DenjoyHarmonic& h, const point::Denjoy& p) {
            return harmonic_value(static_cast<long double>(h.h) * f.embed(p.base, p.side), h.part);
          },
          [](const auto&, const auto&, const auto&) -> double { kind_mismatch("observe"); },
      },
      flow, obs, x);
}

double space_average(const FlowDescriptor& flow, const Observable& obs) {
  check_compatible(flow, obs);
  return std::visit(
      Overloaded{
          [](const flow::Rotation&) { return 0.0; },
          [&](const flow::Odometer&) {
            return std::ldexp(1.0, -static_cast<int>(std::get<obs::Cylinder>(obs).depth));
          },
          [](const flow::Cyclic& f) { return 1.0 / static_cast<double>(f.q); },
          [&](const flow::Denjoy& f) {
            // The invariant measure is Lebesgue on the base circle pushed forward by Phi.
            const auto& h = std::get<obs::DenjoyHarmonic>(obs);
            const long double step = 1.0L / kDenjoyQuadratureNodes;
            KahanSum<double> sum;
            for (std::size_t i = 0; i < kDenjoyQuadratureNodes; ++i) {
              const long double y = (static_cast<long double>(i) + 0.5L) * step;
              const auto base = static_cast<u128>(std::ldexp(y, 64)) << 64;
              sum.add(harmonic_value(static_cast<long double>(h.h) * f.embed(base, Side::Left), h.part));
            }
            return sum.value() / static_cast<double>(kDenjoyQuadratureNodes);
          },
      },
      flow);
}

double metric(const FlowDescriptor& flow, const FlowPoint& x, const FlowPoint& y) {
  return std::visit(
      Overloaded{
          [](const flow::Rotation&, const point::Circle& a, const point::Circle& b) {
            return static_cast<double>(circle_distance(a.angle, b.angle));
          },
          [](const flow::Cyclic&, const point::Cyclic& a, const point::Cyclic& b) {
            return a.state == b.state ? 0.0 : 1.0;
          },
          [](const flow::Odometer&, const point::Odometer& a, const point::Odometer& b) {
            std::uint64_t diff = a.word ^ b.word;
            double d = 0.0;
            while (diff != 0) {
              d += std::ldexp(1.0, -(std::countr_zero(diff) + 1));
              diff &= diff - 1;
            }
            return d;
          },
          [](const flow::Denjoy& f, const point::Denjoy& a, const point::Denjoy& b) {
            const long double d = std::fabs(f.embed(a.base, a.side) - f.embed(b.base, b.side));
            return static_cast<double>(std::min(d, 1.0L - d));
          },
          [](const auto&, const auto&, const auto&) -> double { kind_mismatch("metric"); },
      },
      flow, x, y);
}

// ---------------------------------------------------------------------------
// Sampling and probes

FlowPoint sample_point(const FlowDescriptor& flow, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng = SplitMix64::for_index(seed, index);
  return std::visit(
      Overloaded{
          [&](const flow::Rotation&) -> FlowPoint { return point::Circle{rng.next128()}; },
          [&](const flow::Cyclic& f) -> FlowPoint { return point::Cyclic{rng.below(f.q)}; },
          [&](const flow::Odometer& f) -> FlowPoint {
            return point::Odometer{rng() & odometer_mask(f.depth)};
          },
          [&](const flow::Denjoy&) -> FlowPoint {
            const u128 base = rng.next128();
            return point::Denjoy{base, (rng() & 1) ? Side::Right : Side::Left};
          },
      },
      flow);
}

std::pair<FlowPoint, FlowPoint> sample_close_pair(const FlowDescriptor& flow, double delta,
                                                  std::uint64_t seed, std::uint64_t index) {
  if (!(delta > 0.0)) throw ValidationError("probe radius delta must be positive");
  const FlowPoint x = sample_point(flow, seed, index);
  SplitMix64 rng = SplitMix64::for_index(seed ^ 0x5851F42D4C957F2Dull, index);
  // Offset of magnitude < radius (< 1/2) as a signed 128-bit fraction.
  auto offset = [&](double radius) {
    const double mag = std::min(radius, 0.5) * rng.uniform01();
    const u128 off = static_cast<u128>(std::ldexp(mag, 64)) << 64;
    return (rng() & 1) ? off : static_cast<u128>(0) - off;
  };
  const FlowPoint y = std::visit(
      Overloaded{
          [&](const flow::Rotation&) -> FlowPoint {
            return point::Circle{std::get<point::Circle>(x).angle + offset(delta)};
          },
          [&](const flow::Cyclic& f) -> FlowPoint {
            return delta > 1.0 ? point::Cyclic{rng.below(f.q)} : x;
          },
          [&](const flow::Odometer& f) -> FlowPoint {
            // Words agreeing in the first k digits are closer than 2^-k <= delta.
            unsigned k = 0;
            while (k < f.depth && std::ldexp(1.0, -static_cast<int>(k)) > delta) ++k;
            const std::uint64_t keep = odometer_mask(k);
            const std::uint64_t w = std::get<point::Odometer>(x).word;
            return point::Odometer{((w & keep) | (rng() & ~keep)) & odometer_mask(f.depth)};
          },
          [&](const flow::Denjoy& f) -> FlowPoint {
            const auto& p = std::get<point::Denjoy>(x);
            const Side side = (rng() & 1) ? Side::Right : Side::Left;
            u128 off = offset(delta * (1.0 - f.gap_ratio()) / 2.0);
            for (int attempt = 0; attempt < 96; ++attempt) {
              const point::Denjoy candidate{p.base + off, side};
              if (metric(flow, x, candidate) < delta) return candidate;
              off = static_cast<u128>(static_cast<__int128>(off) / 2);
            }
            return x;
          },
      },
      flow);
  return {x, y};
}

namespace {

ProbeReport run_probe(const FlowDescriptor& flow, std::span<const std::uint64_t> a_values,
                      double delta, double epsilon, bool count_exceptions, std::uint64_t pairs,
                      std::uint64_t N, std::uint64_t seed, Parallelism par) {
  if (pairs == 0) throw ValidationError("probe needs at least one pair");
  if (N == 0 || N > a_values.size()) {
    throw ValidationError("probe length N must lie in [1, " + std::to_string(a_values.size()) + "]");
  }
  std::vector<double> exceptional(pairs, 0.0);
  std::vector<double> mean_distance(pairs, 0.0);
  parallel_for(pairs, par, [&](std::size_t i) {
    const auto [x, y] = sample_close_pair(flow, delta, seed, i);
    std::uint64_t bad = 0;
    KahanSum<double> total;
    for (std::uint64_t n = 0; n < N; ++n) {
      const double d = metric(flow, iterate(flow, x, a_values[n]), iterate(flow, y, a_values[n]));
      total.add(d);
      if (count_exceptions && d >= epsilon) ++bad;
    }
    exceptional[i] = static_cast<double>(bad) / static_cast<double>(N);
    mean_distance[i] = total.value() / static_cast<double>(N);
  });
  ProbeReport report;
  report.delta = delta;
  report.epsilon = count_exceptions ? epsilon : 0.0;
  report.pairs_tested = pairs;
  report.worst_exceptional_density = *std::max_element(exceptional.begin(), exceptional.end());
  report.worst_mean_distance = *std::max_element(mean_distance.begin(), mean_distance.end());
  return report;
}

}  // namespace

ProbeReport mls_probe(const FlowDescriptor& flow, std::span<const std::uint64_t> a_values,
                      double delta, double epsilon, std::uint64_t pairs, std::uint64_t N,
                      std::uint64_t seed, Parallelism par) {
  if (!(epsilon > 0.0)) throw ValidationError("probe epsilon must be positive");
  return run_probe(flow, a_values, delta, epsilon, true, pairs, N, seed, par);
}

ProbeReport meq_probe(const FlowDescriptor& flow, std::span<const std::uint64_t> a_values,
                      double delta, std::uint64_t pairs, std::uint64_t N, std::uint64_t seed,
                      Parallelism par) {
  return run_probe(flow, a_values, delta, 0.0, false, pairs, N, seed, par);
}

double mean_attraction(const FlowDescriptor& flow, const FlowPoint& x, const FlowPoint& z,
                       std::span<const std::uint64_t> a_values, std::uint64_t N) {
  if (N == 0 || N > a_values.size()) {
    throw ValidationError("mean_attraction: N must lie in [1, " + std::to_string(a_values.size()) + "]");
  }
  metric(flow, x, z);  // kind check
  KahanSum<double> total;
  for (std::uint64_t n = 0; n < N; ++n) {
    total.add(metric(flow, iterate(flow, x, a_values[n]), iterate(flow, z, a_values[n])));
  }
  return total.value() / static_cast<double>(N);
}

// ---------------------------------------------------------------------------
// Text forms

FlowDescriptor parse_flow(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  if (kind == "rotation") return flow::Rotation{parse_irrational(rest.empty() ? "golden" : rest)};
  if (kind == "cyclic") {
    const auto q = parse_number<std::uint64_t>(rest, "cyclic size");
    if (q < 2) throw ValidationError("cyclic flow needs q >= 2");
    return flow::Cyclic{q};
  }
  if (kind == "odometer") {
    const unsigned depth = rest.empty() ? 48u : parse_number<unsigned>(rest, "odometer depth");
    if (depth < 1 || depth > 64) throw ValidationError("odometer depth must lie in [1, 64]");
    return flow::Odometer{depth};
  }
  if (kind == "denjoy") {
    if (rest.empty()) return flow::Denjoy(golden_fraction(), 0.5, 64);
    const auto parts = split(rest, ':');
    if (parts.size() < 3) {
      throw ValidationError("Denjoy flow must look like denjoy:<angle>:<gap ratio>:<truncation>");
    }
    const std::string angle = join(std::span(parts).first(parts.size() - 2), ':');
    return flow::Denjoy(parse_irrational(angle),
                        parse_number<double>(parts[parts.size() - 2], "gap ratio"),
                        parse_number<unsigned>(parts.back(), "truncation"));
  }
  throw ValidationError("unknown flow '" + std::string(text) +
                        "' (expected rotation, cyclic, odometer or denjoy)");
}

Observable parse_observable(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts[0] == "harm" || parts[0] == "denharm") {
    if (parts.size() != 3) throw ValidationError("harmonic must look like harm:<h>:re|im");
    const auto h = parse_number<std::int64_t>(parts[1], "harmonic index");
    if (h == 0) throw ValidationError("harmonic index must be nonzero");
    const Part part = parse_part(parts[2]);
    if (parts[0] == "harm") return obs::Harmonic{h, part};
    return obs::DenjoyHarmonic{h, part};
  }
  if (parts[0] == "cyl") {
    if (parts.size() != 2) throw ValidationError("cylinder must look like cyl:<bits>");
    const std::string_view bits = parts[1];
    if (bits.size() > 64) throw ValidationError("cylinder deeper than 64 digits");
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (bits[j] != '0' && bits[j] != '1') throw ValidationError("cylinder digits must be 0 or 1");
      if (bits[j] == '1') word |= std::uint64_t{1} << j;
    }
    return obs::Cylinder{word, static_cast<unsigned>(bits.size())};
  }
  if (parts[0] == "state") {
    if (parts.size() != 2) throw ValidationError("state indicator must look like state:<r>");
    return obs::StateIndicator{parse_number<std::uint64_t>(parts[1], "state")};
  }
  throw ValidationError("unknown observable '" + std::string(text) + "'");
}

FlowPoint default_start(const FlowDescriptor& flow) {
  return std::visit(Overloaded{
                        [](const flow::Rotation&) -> FlowPoint { return point::Circle{0}; },
                        [](const flow::Cyclic&) -> FlowPoint { return point::Cyclic{0}; },
                        [](const flow::Odometer&) -> FlowPoint { return point::Odometer{0}; },
                        [](const flow::Denjoy&) -> FlowPoint { return point::Denjoy{0, Side::Left}; },
                    },
                    flow);
}

FlowPoint parse_point(const FlowDescriptor& flow, std::string_view text) {
  if (text.empty()) return default_start(flow);
  return std::visit(
      Overloaded{
          [&](const flow::Rotation&) -> FlowPoint { return point::Circle{parse_angle(text)}; },
          [&](const flow::Cyclic& f) -> FlowPoint {
            const auto s = parse_number<std::uint64_t>(text, "cyclic state");
            if (s >= f.q) throw ValidationError("cyclic state must be below q");
            return point::Cyclic{s};
          },
          [&](const flow::Odometer& f) -> FlowPoint {
            if (text.size() > f.depth) throw ValidationError("odometer word longer than the depth");
            std::uint64_t word = 0;
            for (std::size_t j = 0; j < text.size(); ++j) {
              if (text[j] != '0' && text[j] != '1') throw ValidationError("odometer digits must be 0 or 1");
              if (text[j] == '1') word |= std::uint64_t{1} << j;
            }
            return point::Odometer{word};
          },
          [&](const flow::Denjoy&) -> FlowPoint {
            Side side = Side::Left;
            std::string_view angle = text;
            if (angle.ends_with(":right")) {
              side = Side::Right;
              angle.remove_suffix(6);
            } else if (angle.ends_with(":left")) {
              angle.remove_suffix(5);
            }
            return point::Denjoy{parse_angle(angle), side};
          },
      },
      flow);
}

std::string to_string(const FlowDescriptor& flow) {
  return std::visit(
      Overloaded{
          [](const flow::Rotation& f) { return "rotation:" + angle_label(f.rho); },
          [](const flow::Cyclic& f) { return "cyclic:" + std::to_string(f.q); },
          [](const flow::Odometer& f) { return "odometer:" + std::to_string(f.depth); },
          [](const flow::Denjoy& f) {
            char ratio[32];
            std::snprintf(ratio, sizeof ratio, "%.17g", f.gap_ratio());
            return "denjoy:" + angle_label(f.rho()) + ":" + ratio + ":" +
                   std::to_string(f.truncation());
          },
      },
      flow);
}

std::string to_string(const Observable& obs) {
  auto part = [](Part p) { return p == Part::Re ? "re" : "im"; };
  return std::visit(
      Overloaded{
          [&](const obs::Harmonic& h) { return "harm:" + std::to_string(h.h) + ":" + part(h.part); },
          [&](const obs::DenjoyHarmonic& h) {
            return "denharm:" + std::to_string(h.h) + ":" + part(h.part);
          },
          [](const obs::Cylinder& c) {
            std::string bits;
            for (unsigned j = 0; j < c.depth; ++j) bits += ((c.word >> j) & 1u) ? '1' : '0';
            return "cyl:" + bits;
          },
          [](const obs::StateIndicator& s) { return "state:" + std::to_string(s.r); },
      },
      obs);
}

std::string to_string(const FlowPoint& x) {
  return std::visit(
      Overloaded{
          [](const point::Circle& p) { return angle_label(p.angle); },
          [](const point::Cyclic& p) { return std::to_string(p.state); },
          [](const point::Odometer& p) {
            if (p.word == 0) return std::string("0");
            std::string bits;
            for (std::uint64_t w = p.word; w != 0; w >>= 1) bits += (w & 1u) ? '1' : '0';
            return bits;
          },
          [](const point::Denjoy& p) {
            return angle_label(p.base) + (p.side == Side::Right ? ":right" : ":left");
          },
      },
      x);
}

}  // namespace ubseq
