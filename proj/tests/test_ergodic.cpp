#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ubseq/distribution.hpp"
#include "ubseq/ergodic.hpp"
#include "ubseq/error.hpp"
#include "ubseq/sequence.hpp"

using namespace ubseq;

namespace {

const ArithmeticFunctionTable& table() {
  static const auto t = ArithmeticFunctionTable::build(1000000);
  return t;
}

const std::vector<std::uint64_t>& big_omega() {
  static const auto v = sequence_values(seq::BigOmega{}, 1000000, table());
  return v;
}

const std::vector<std::uint64_t>& identity() {
  static const auto v = sequence_values(seq::Identity{}, 1000000, table());
  return v;
}

}  // namespace

TEST(TimeAverage, CyclicStateMatchesResidueDensities) {
  const auto cps = geometric_checkpoints(1000000);
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const auto flow = parse_flow("cyclic:" + std::to_string(q));
    const auto dens = residue_densities(big_omega(), q, cps);
    for (std::uint64_t r = 0; r < q; ++r) {
      const auto s = time_average_series(flow, obs::StateIndicator{r}, default_start(flow), big_omega(), cps);
      for (std::size_t j = 0; j < cps.size(); ++j) ASSERT_EQ(s.points[j].value, dens[j].densities[r]);
    }
  }
}

TEST(TimeAverage, OdometerCylinderMatchesResidueDensities) {
  const auto cps = geometric_checkpoints(1000000);
  const auto flow = parse_flow("odometer:48");
  const auto dens = residue_densities(big_omega(), 8, cps);
  for (std::uint64_t r = 0; r < 8; ++r) {
    const auto s = time_average_series(flow, obs::Cylinder{r, 3}, default_start(flow), big_omega(), cps);
    for (std::size_t j = 0; j < cps.size(); ++j) ASSERT_EQ(s.points[j].value, dens[j].densities[r]);
  }
}

TEST(TimeAverage, LabelsAndBounds) {
  const auto flow = parse_flow("rotation:sqrt2m1");
  const auto s = time_average_series(flow, parse_observable("harm:1:im"), parse_point(flow, "golden"), big_omega(),
                                     geometric_checkpoints(1000000), {}, "omega");
  EXPECT_EQ(s.flow_label, "rotation:sqrt2m1");
  EXPECT_EQ(s.observable_label, "harm:1:im");
  EXPECT_EQ(s.sequence_label, "omega");
  EXPECT_EQ(s.start_label, "golden");
  for (const auto& p : s.points) EXPECT_LE(std::fabs(p.value), 1.0);
  EXPECT_THROW(time_average_series(flow, parse_observable("cyl:1"), default_start(flow), big_omega(),
                                   geometric_checkpoints(1000)),
               ValidationError);
  EXPECT_THROW(time_average_series(flow, parse_observable("harm:1:re"), point::Cyclic{0}, big_omega(),
                                   geometric_checkpoints(1000)),
               ValidationError);
  EXPECT_THROW(time_average_series(flow, parse_observable("harm:1:re"), default_start(flow),
                                   std::span(big_omega()).first(10), geometric_checkpoints(1000)),
               ValidationError);
}

TEST(TimeAverage, RotationAlongIdentityGeometricBound) {
  const auto flow = parse_flow("rotation:golden");
  const auto s = time_average_series(flow, parse_observable("harm:1:re"), default_start(flow), identity(),
                                     std::vector<std::uint64_t>{100000});
  const double g = Theta::fixed(golden_fraction()).to_double();
  EXPECT_LE(std::fabs(s.points[0].value), 1.0 / (100000 * std::sin(std::numbers::pi * g)) + 1e-15);
}

TEST(TimeAverage, ConvergesFromRandomStarts) {
  const std::vector<std::uint64_t> cps{1000000};
  struct Case {
    const char* flow;
    const char* obs;
    const std::vector<std::uint64_t>* a;
    double tol;
  };
  const std::vector<Case> cases{{"cyclic:2", "state:1", &big_omega(), 0.005},
                                {"odometer:48", "cyl:1", &big_omega(), 0.005},
                                {"rotation:golden", "harm:1:re", &big_omega(), 0.05},
                                {"denjoy", "denharm:1:re", &identity(), 0.005}};
  for (const auto& c : cases) {
    const auto flow = parse_flow(c.flow);
    const auto obs = parse_observable(c.obs);
    const double target = space_average(flow, obs);
    for (std::uint64_t i = 0; i < 3; ++i) {
      const auto x = sample_point(flow, 2024, i);
      const auto s = time_average_series(flow, obs, x, *c.a, cps);
      EXPECT_NEAR(s.points[0].value, target, c.tol) << c.flow << " from " << to_string(x);
    }
  }
}

TEST(MaskedAverage, AllOnesMaskIsBitIdentical) {
  const auto all = IndicatorSequence::from_predicate("all", 1000000, [](std::uint64_t) { return true; });
  const auto flow = parse_flow("rotation:golden");
  const auto obs = parse_observable("harm:1:re");
  const auto cps = geometric_checkpoints(1000000);
  const auto plain = time_average_series(flow, obs, default_start(flow), big_omega(), cps);
  const auto masked = masked_time_average_series(flow, obs, default_start(flow), big_omega(), all, cps);
  EXPECT_EQ(plain.points, masked.points);
}

TEST(MaskedAverage, EmptyMaskIsZero) {
  const IndicatorSequence none("none", 100000);
  const auto flow = parse_flow("cyclic:2");
  const auto s = masked_time_average_series(flow, parse_observable("state:0"), default_start(flow), big_omega(),
                                            none, geometric_checkpoints(100000));
  for (const auto& p : s.points) EXPECT_EQ(p.value, 0.0);
}

TEST(MaskedAverage, SquareFreeSmallOmegaOnCyclic) {
  const auto small = sequence_values(seq::SmallOmega{}, 1000000, table());
  const auto sf = indicator_for(IndicatorName::SquareFree, table());
  const auto flow = parse_flow("cyclic:2");
  const auto s = masked_time_average_series(flow, parse_observable("state:0"), default_start(flow), small, sf,
                                            std::vector<std::uint64_t>{1000, 1000000});
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) count += table().squarefree(n) && table().small_omega(n) % 2 == 0;
  EXPECT_EQ(s.points[0].value, static_cast<double>(count) / 1000.0);
  EXPECT_NEAR(s.points[1].value, 3.0 / (std::numbers::pi * std::numbers::pi), 0.01);
  EXPECT_THROW(masked_time_average_series(flow, parse_observable("state:0"), default_start(flow), small,
                                          IndicatorSequence("short", 10), std::vector<std::uint64_t>{100}),
               ValidationError);
}

TEST(Averages, DeterministicAcrossThreadCounts) {
  const auto cps = geometric_checkpoints(1000000);
  const auto flow = parse_flow("rotation:golden");
  const auto obs = parse_observable("harm:1:re");
  const auto one = time_average_series(flow, obs, default_start(flow), big_omega(), cps, Parallelism{1});
  const auto w = weight_values("lambda", 1000000, table());
  const auto d1 = linear_disjointness_series(w, flow, obs, default_start(flow), cps, Parallelism{1});
  for (unsigned t : {2u, 8u}) {
    EXPECT_EQ(one.points, time_average_series(flow, obs, default_start(flow), big_omega(), cps, Parallelism{t}).points);
    EXPECT_EQ(d1.points, linear_disjointness_series(w, flow, obs, default_start(flow), cps, Parallelism{t}).points);
  }
}

TEST(Convergence, Reports) {
  AverageSeries constant;
  constant.points = {{10, 0.5}, {100, 0.5}, {1000, 0.5}};
  const auto at = convergence_report(constant, 0.5);
  for (const auto& r : at.residuals) EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(at.final_residual, 0.0);
  EXPECT_FALSE(at.monotone_improvement);
  const auto off = convergence_report(constant, 0.25);
  EXPECT_FALSE(off.monotone_improvement);
  EXPECT_EQ(off.final_residual, 0.25);
  AverageSeries improving;
  improving.points = {{10, 0.3}, {100, 0.45}, {1000, 0.499}};
  EXPECT_TRUE(convergence_report(improving, 0.5).monotone_improvement);
  EXPECT_THROW(convergence_report(AverageSeries{}, 0.0), ValidationError);
}

TEST(Convergence, LiouvilleMean) {
  const auto w = weight_values("lambda", 1000000, table());
  const auto flow = parse_flow("odometer:1");
  // Depth-0 cylinder is the constant 1, so the weighted average is the Liouville mean.
  const auto s = linear_disjointness_series(w, flow, parse_observable("cyl:"), default_start(flow),
                                            geometric_checkpoints(1000000));
  EXPECT_LT(convergence_report(s, 0.0).final_residual, 0.002);
}

TEST(LinearDisjointness, UnitWeightsOnConstantObservable) {
  const auto w = weight_values("ones", 100000, table());
  const auto flow = parse_flow("odometer:8");
  const auto s = linear_disjointness_series(w, flow, parse_observable("cyl:"), default_start(flow),
                                            geometric_checkpoints(100000));
  for (const auto& p : s.points) EXPECT_EQ(p.value, 1.0);
}

TEST(LinearDisjointness, WeightedAveragesVanish) {
  const auto flow = parse_flow("rotation:golden");
  const auto obs = parse_observable("harm:1:re");
  const std::vector<std::uint64_t> cps{10000, 1000000};
  for (const char* name : {"tm", "lambda", "mobius"}) {
    const auto w = weight_values(name, 1000000, table());
    const auto s = linear_disjointness_series(w, flow, obs, default_start(flow), cps);
    EXPECT_LT(std::fabs(s.points[1].value), 0.05) << name;
  }
}

TEST(LinearDisjointness, SplittingIdentity) {
  const auto& t = table();
  const std::vector<std::pair<const char*, const char*>> systems{
      {"rotation:golden", "harm:1:re"}, {"rotation:sqrt2m1", "harm:2:im"}, {"odometer:16", "cyl:10"},
      {"cyclic:3", "state:2"}, {"denjoy", "denharm:1:im"}};
  for (const auto& set : {indicator_for("tm", t), indicator_for("ef", t), indicator_for("sf", t)}) {
    for (const auto& [f, o] : systems) {
      const auto flow = parse_flow(f);
      for (std::uint64_t i = 0; i < 2; ++i) {
        const auto r = disjointness_identity_check(set, flow, parse_observable(o), sample_point(flow, 6, i), 20000);
        EXPECT_LT(r.deviation, 1e-9) << set.name() << " " << f;
      }
    }
  }
}
