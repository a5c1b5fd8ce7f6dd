#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "ubseq/distribution.hpp"
#include "ubseq/error.hpp"
#include "ubseq/rng.hpp"
#include "ubseq/sequence.hpp"

using namespace ubseq;

namespace {

const ArithmeticFunctionTable& table() {
  static const auto t = ArithmeticFunctionTable::build(1700000);
  return t;
}

}  // namespace

TEST(Discrepancy, KnownConfigurations) {
  EXPECT_DOUBLE_EQ(discrepancy_star(std::vector<double>{0.5}), 0.5);
  std::vector<double> centred(100);
  for (std::size_t i = 0; i < centred.size(); ++i) centred[i] = (i + 0.5) / 100.0;
  EXPECT_NEAR(discrepancy_star(centred), 0.005, 1e-15);
}

TEST(Discrepancy, MatchesBreakpointOracle) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(1 + rng.below(500));
    for (auto& v : x) v = rng.uniform01();
    EXPECT_NEAR(discrepancy_star(x), oracle::star_discrepancy(x), 1e-15);
  }
}

TEST(RdTest, IdentityAtGoldenPasses) {
  const auto n = sequence_values(seq::Identity{}, 10000, table());
  const auto r = rd_test(n, std::vector<Theta>{theta_parse("golden")}, 10000, 0.01).front();
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.abs_average.size(), 3u);
  const long double g = (std::sqrt(5.0L) - 1) / 2;
  for (unsigned h = 1; h <= 3; ++h) {
    EXPECT_NEAR(r.abs_average[h - 1], std::abs(oracle::weyl_real(n, 10000, h * g)), 1e-9);
  }
  EXPECT_LT(r.star_discrepancy, 10 * std::log(10000.0) / 10000);
}

TEST(RdTest, SquareFreeListingAtGolden) {
  const auto a = sequence_values(seq::SubseqOf{IndicatorName::SquareFree}, 1000000, table());
  const auto r = rd_test(a, std::vector<Theta>{theta_parse("golden")}, 1000000, 0.05).front();
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.abs_average[0], 0.05);
  EXPECT_THROW(rd_test(a, std::vector<Theta>{Theta::rational(1, 3)}, 1000, 0.1), ValidationError);
}

TEST(RdTest, ConstantSequenceFails) {
  const std::vector<std::uint64_t> c(10000, 3);
  const auto r = rd_test(c, std::vector<Theta>{theta_parse("golden")}, 10000, 0.1);
  EXPECT_FALSE(r[0].pass);
}

TEST(ResidueDensities, MatchDirectCountsAndSumToOne) {
  const auto a = sequence_values(seq::BigOmega{}, 100000, table());
  const std::vector<std::uint64_t> cps{100, 5000, 100000};
  const auto reports = residue_densities(a, 8, cps);
  for (std::size_t j = 0; j < cps.size(); ++j) {
    std::vector<std::uint64_t> count(8, 0);
    for (std::uint64_t n = 1; n <= cps[j]; ++n) ++count[oracle::big_omega(n) % 8];
    double total = 0.0;
    for (std::uint64_t r = 0; r < 8; ++r) {
      EXPECT_EQ(reports[j].densities[r], static_cast<double>(count[r]) / static_cast<double>(cps[j]));
      total += reports[j].densities[r];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  EXPECT_THROW(residue_densities(a, 1, cps), ValidationError);
}

TEST(ResidueDensities, SquareFreeListingCoprimeResidues) {
  // Density of residue r along the square-free listing, gcd(r, m) = 1:
  // (1/m) prod_{p | m} (1 - 1/p^2)^{-1}; for m = 3 this is 3/8.
  const auto a = sequence_values(seq::SubseqOf{IndicatorName::SquareFree}, 500000, table());
  const auto d = residue_densities(a, 3, std::vector<std::uint64_t>{500000})[0].densities;
  EXPECT_NEAR(d[1], 3.0 / 8.0, 2e-3);
  EXPECT_NEAR(d[2], 3.0 / 8.0, 2e-3);
  EXPECT_NEAR(d[0], 1.0 / 4.0, 2e-3);
}

TEST(Densities, SquareFree) {
  const auto sf = indicator_for(IndicatorName::SquareFree, table());
  const auto s = densities(sf, geometric_checkpoints(1000000));
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 1000000; ++n) count += oracle::squarefree(n);
  EXPECT_EQ(s.series.back().value, static_cast<double>(count) / 1e6);
  EXPECT_NEAR(s.series.back().value, 6.0 / (std::numbers::pi * std::numbers::pi), 1e-3);
  EXPECT_GE(s.upper, s.lower);
}

TEST(ADensity, IdentitySequenceMatchesDensity) {
  const auto sf = indicator_for(IndicatorName::SquareFree, table());
  const auto a = sequence_values(seq::Identity{}, 100000, table());
  const auto cps = geometric_checkpoints(100000);
  EXPECT_EQ(a_density(a, sf, cps).series, densities(sf, cps).series);
}

TEST(ADensity, CountsWithMultiplicity) {
  const auto a = sequence_values(seq::BigOmega{}, 1000000, table());
  const auto evens = IndicatorSequence::from_predicate("even", 64, [](std::uint64_t n) { return n % 2 == 0; });
  const auto s = a_density(a, evens, std::vector<std::uint64_t>{1000000});
  // a_1 = Omega(1) = 0 is not a member of any subset of N.
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 1000000; ++n) count += (a[n - 1] != 0 && a[n - 1] % 2 == 0);
  EXPECT_EQ(s.series[0].value, static_cast<double>(count) / 1e6);
  EXPECT_NEAR(s.series[0].value, 0.5, 0.005);
  const IndicatorSequence empty("none", 64);
  EXPECT_EQ(a_density(a, empty, std::vector<std::uint64_t>{1000}).series[0].value, 0.0);
  const IndicatorSequence tiny("tiny", 2);
  EXPECT_THROW(a_density(a, tiny, std::vector<std::uint64_t>{1000}), ValidationError);
}

TEST(PropDad, IdentityGivesEquality) {
  const auto ef = indicator_for(IndicatorName::EvenFactors, table());
  const auto all = IndicatorSequence::from_predicate("all", 1000000, [](std::uint64_t) { return true; });
  const auto r = prop_dad_check(subsequence_of(all), ef, 100000);
  EXPECT_DOUBLE_EQ(r.lhs, r.rhs);
  EXPECT_TRUE(r.holds);
}

TEST(PropDad, EvenNumbersAndMultiplesOfFour) {
  const auto evens = IndicatorSequence::from_predicate("even", 1000000, [](std::uint64_t n) { return n % 2 == 0; });
  const auto fours = IndicatorSequence::from_predicate("4N", 1000000, [](std::uint64_t n) { return n % 4 == 0; });
  const auto r = prop_dad_check(subsequence_of(evens), fours, 100000);
  EXPECT_NEAR(r.lhs, 0.5, 1e-3);
  EXPECT_NEAR(r.rhs, 0.5, 1e-3);
  EXPECT_TRUE(r.holds);
}

TEST(PropDad, SquareFreeListingAgainstEvenFactors) {
  const auto sf = indicator_for(IndicatorName::SquareFree, table());
  const auto ef = indicator_for(IndicatorName::EvenFactors, table());
  const auto r = prop_dad_check(subsequence_of(sf), ef, 500000);
  EXPECT_TRUE(r.holds);
  EXPECT_LE(r.lhs, r.rhs + 0.02);
}

TEST(Panel, MatchesDirectSums) {
  const std::vector<std::uint64_t> cps{10, 10000, 1000000};
  const auto panel = number_theory_panel(table(), cps);
  EXPECT_DOUBLE_EQ(panel[0].mertens_mean, -0.1);
  std::int64_t lam = 0, mu = 0, primes = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    lam += (oracle::big_omega(n) % 2) ? -1 : 1;
    mu += oracle::mobius(n);
    primes += oracle::big_omega(n) == 1;
  }
  EXPECT_EQ(primes, 1229);
  EXPECT_DOUBLE_EQ(panel[1].liouville_mean, lam / 1e4);
  EXPECT_DOUBLE_EQ(panel[1].mertens_mean, mu / 1e4);
  EXPECT_NEAR(panel[1].pnt_ratio, 1229 * std::log(1e4) / 1e4, 1e-12);
  EXPECT_LT(std::fabs(panel[2].liouville_mean), 0.002);
  EXPECT_LT(std::fabs(panel[2].mertens_mean), 0.002);
}

TEST(TransferIdentity, ExactAcrossIndicatorsAndAngles) {
  const auto& t = table();
  const auto all = IndicatorSequence::from_predicate("all", 100000, [](std::uint64_t) { return true; });
  for (const auto& ind : {indicator_for("tm", t), indicator_for("sf", t), indicator_for("ef", t), all}) {
    for (const char* theta : {"golden", "rat:1/3", "sqrt2m1"}) {
      const auto r = finite_transfer_identity_check(ind, theta_parse(theta), 10000);
      EXPECT_LT(r.deviation, 1e-6) << ind.name() << " " << theta;
      EXPECT_GT(std::abs(r.subsequence_side), 0.0);
    }
  }
  EXPECT_THROW(finite_transfer_identity_check(IndicatorSequence("none", 10), theta_parse("golden"), 1),
               ValidationError);
}

TEST(RateFit, ExactPowerLaw) {
  std::vector<std::pair<double, double>> pts;
  for (int k = 10; k <= 20; ++k) pts.emplace_back(std::ldexp(1.0, k), std::pow(2.0, k / 2.0));
  const auto fit = rate_fit(pts);
  EXPECT_NEAR(fit.slope, 0.5, 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  EXPECT_THROW(rate_fit(std::span(pts).first(3)), ValidationError);
  pts[2].second = 0.0;
  EXPECT_THROW(rate_fit(pts), ValidationError);
}
