#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "ubseq/automatic.hpp"
#include "ubseq/dynsys.hpp"
#include "ubseq/ergodic.hpp"
#include "ubseq/sequence.hpp"
#include "ubseq/sieve.hpp"
#include "ubseq/weyl.hpp"

using namespace ubseq;

namespace {

const ArithmeticFunctionTable& table() {
  static const auto t = ArithmeticFunctionTable::build(1 << 22);
  return t;
}

const std::vector<std::uint64_t>& omega_values() {
  static const auto v = sequence_values(seq::BigOmega{}, 1 << 22, table());
  return v;
}

void BM_Sieve(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ArithmeticFunctionTable::build(n));
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_Sieve)->RangeMultiplier(4)->Range(1 << 16, 1 << 22)->Unit(benchmark::kMillisecond);

void weyl_bench(benchmark::State& state, const Theta& theta) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const std::vector<std::uint64_t> cps{n};
  const Parallelism par{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_series(omega_values(), theta, cps, par));
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}

void BM_WeylRational(benchmark::State& state) { weyl_bench(state, Theta::rational(1, 3)); }
void BM_WeylFixed(benchmark::State& state) { weyl_bench(state, theta_parse("golden")); }
BENCHMARK(BM_WeylRational)->Args({1 << 20, 1})->Args({1 << 22, 1})->Args({1 << 22, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeylFixed)->Args({1 << 20, 1})->Args({1 << 22, 1})->Args({1 << 22, 4})->Unit(benchmark::kMillisecond);

void BM_SupProfile(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto w = weight_values("tm", n, table());
  const auto grid = default_theta_grid();
  for (auto _ : state) benchmark::DoNotOptimize(sup_profile(w, grid, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(n * grid.size()) * state.iterations());
}
BENCHMARK(BM_SupProfile)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_TimeAverage(benchmark::State& state) {
  const auto flow = parse_flow(state.range(1) == 0 ? "odometer:48" : "denjoy");
  const auto obs = parse_observable(state.range(1) == 0 ? "cyl:101" : "denharm:1:re");
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const std::vector<std::uint64_t> cps{n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_average_series(flow, obs, default_start(flow), omega_values(), cps));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_TimeAverage)->Args({1 << 20, 0})->Args({1 << 18, 1})->Unit(benchmark::kMillisecond);

void BM_MlsProbe(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::vector<std::uint64_t> tm;
  for (std::uint64_t k = 1; tm.size() < n; ++k) {
    if (thue_morse_bit(k)) tm.push_back(k);
  }
  const auto flow = parse_flow("denjoy");
  for (auto _ : state) benchmark::DoNotOptimize(mls_probe(flow, tm, 1e-3, 0.05, 16, n, 0));
  state.SetItemsProcessed(static_cast<std::int64_t>(n * 16) * state.iterations());
}
BENCHMARK(BM_MlsProbe)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
