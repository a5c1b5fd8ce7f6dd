#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "support/oracles.hpp"
#include "ubseq/automatic.hpp"
#include "ubseq/error.hpp"
#include "ubseq/indicator.hpp"
#include "ubseq/sequence.hpp"
#include "ubseq/series.hpp"

using namespace ubseq;

namespace {

const ArithmeticFunctionTable& table() {
  static const auto t = ArithmeticFunctionTable::build(100000);
  return t;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ubseq_test_" + name)).string();
}

}  // namespace

TEST(Automatic, ThueMorseFollowsItsRecursion) {
  const auto t = oracle::thue_morse_table(1 << 16);
  for (std::uint64_t n = 0; n < t.size(); ++n) ASSERT_EQ(thue_morse_bit(n), t[n]) << n;
  EXPECT_EQ(thue_morse_bit(0), 0);
}

TEST(Automatic, RudinShapiroFollowsItsRecursion) {
  const auto r = oracle::rudin_shapiro_table(1 << 16);
  for (std::uint64_t n = 0; n < r.size(); ++n) ASSERT_EQ(rudin_shapiro_bit(n), r[n]) << n;
  // 3 = 11b has one "11" block, 7 = 111b has two.
  EXPECT_EQ(rudin_shapiro_bit(3), 0);
  EXPECT_EQ(rudin_shapiro_bit(7), 1);
}

TEST(Indicator, MembershipAndCounting) {
  IndicatorSequence s("evens", 10);
  for (std::uint64_t n = 2; n <= 10; n += 2) s.set(n);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(5));
  EXPECT_FALSE(s.contains(0));
  EXPECT_FALSE(s.contains(12));
  EXPECT_EQ(s.count(), 5u);
  EXPECT_EQ(s.count_upto(7), 3u);
  EXPECT_EQ(s.count_upto(1000), 5u);
  EXPECT_THROW(s.set(11), ValidationError);
  EXPECT_THROW(s.set(0), ValidationError);
}

TEST(Indicator, NamedSetsPartitionCorrectly) {
  const auto& t = table();
  const auto ef = indicator_for(IndicatorName::EvenFactors, t);
  const auto of = indicator_for(IndicatorName::OddFactors, t);
  const auto sf = indicator_for(IndicatorName::SquareFree, t);
  const auto efsf = indicator_for(IndicatorName::EvenSquareFree, t);
  const auto ofsf = indicator_for(IndicatorName::OddSquareFree, t);
  const auto tm = indicator_for("tm", t);
  const auto rs = indicator_for("RS", t);
  for (std::uint64_t n = 1; n <= t.max_n(); ++n) {
    ASSERT_NE(ef.contains(n), of.contains(n));
    ASSERT_EQ(ef.contains(n), oracle::big_omega(n) % 2 == 0);
    ASSERT_EQ(sf.contains(n), efsf.contains(n) || ofsf.contains(n));
    ASSERT_FALSE(efsf.contains(n) && ofsf.contains(n));
    ASSERT_EQ(efsf.contains(n), ef.contains(n) && sf.contains(n));
    ASSERT_EQ(tm.contains(n), thue_morse_bit(n) == 1);
    ASSERT_EQ(rs.contains(n), rudin_shapiro_bit(n) == 1);
  }
}

TEST(Indicator, NameParsing) {
  EXPECT_EQ(parse_indicator_name("SF"), IndicatorName::SquareFree);
  EXPECT_EQ(parse_indicator_name("efsf"), IndicatorName::EvenSquareFree);
  EXPECT_EQ(to_string(IndicatorName::OddSquareFree), "ofsf");
  EXPECT_THROW(parse_indicator_name("primes"), ValidationError);
}

TEST(Indicator, SubsequenceListsMembersInOrder) {
  const auto sub = subsequence_of(indicator_for(IndicatorName::SquareFree, table()));
  ASSERT_GE(sub.values.size(), 6u);
  EXPECT_EQ(std::vector<std::uint64_t>(sub.values.begin(), sub.values.begin() + 6),
            (std::vector<std::uint64_t>{1, 2, 3, 5, 6, 7}));
  EXPECT_TRUE(std::is_sorted(sub.values.begin(), sub.values.end()));
  EXPECT_THROW(subsequence_of(IndicatorSequence("empty", 100)), ValidationError);
}

TEST(SequenceSpec, ParsesAndPrints) {
  for (const std::string s : {"omega", "smallomega", "n", "poly:1,0,2", "tm", "sf", "efsf", "file:/tmp/x"}) {
    EXPECT_EQ(to_string(parse_sequence_spec(s)), s);
  }
  EXPECT_EQ(to_string(parse_sequence_spec("bigomega")), "omega");
  EXPECT_THROW(parse_sequence_spec("poly:"), ValidationError);
  EXPECT_THROW(parse_sequence_spec("fibonacci"), ValidationError);
}

TEST(SequenceSpec, Values) {
  const auto& t = table();
  const auto omega = sequence_values(seq::BigOmega{}, 100, t);
  for (std::uint64_t n = 1; n <= 100; ++n) EXPECT_EQ(omega[n - 1], oracle::big_omega(n));
  EXPECT_EQ(sequence_values(seq::Identity{}, 3, t), (std::vector<std::uint64_t>{1, 2, 3}));
  // 1 + 2n^2
  EXPECT_EQ(sequence_values(parse_sequence_spec("poly:1,0,2"), 3, t), (std::vector<std::uint64_t>{3, 9, 19}));
  EXPECT_THROW(sequence_values(parse_sequence_spec("poly:0,0,0,0,0,1"), 10000, t), ValidationError);
  EXPECT_THROW(sequence_values(seq::BigOmega{}, t.max_n() + 1, t), ValidationError);
  EXPECT_THROW(sequence_values(seq::SubseqOf{IndicatorName::SquareFree}, t.max_n(), t), ValidationError);
  const auto sf = sequence_values(seq::SubseqOf{IndicatorName::SquareFree}, 10, t);
  EXPECT_EQ(sf.back(), 14u);
}

TEST(SequenceSpec, SuggestedSieveCoversTheListing) {
  for (const auto name : {IndicatorName::SquareFree, IndicatorName::EvenSquareFree, IndicatorName::ThueMorse,
                          IndicatorName::EvenFactors}) {
    const seq::SubseqOf spec{name};
    const std::uint64_t N = 20000;
    const auto t = ArithmeticFunctionTable::build(suggested_sieve_size(spec, N));
    EXPECT_NO_THROW(sequence_values(spec, N, t)) << to_string(name);
  }
}

TEST(SequenceSpec, FileInput) {
  const auto path = temp_path("seq.txt");
  {
    std::ofstream out(path);
    out << "3\n\n5\n 8 \n";
  }
  EXPECT_EQ(read_sequence_file(path), (std::vector<std::uint64_t>{3, 5, 8}));
  EXPECT_EQ(sequence_values(seq::FromFile{path}, 2, table()), (std::vector<std::uint64_t>{3, 5}));
  EXPECT_THROW(sequence_values(seq::FromFile{path}, 4, table()), ValidationError);
  {
    std::ofstream out(path);
    out << "3\n0\n";
  }
  EXPECT_THROW(read_sequence_file(path), ValidationError);
  {
    std::ofstream out(path);
    out << "3\nx\n";
  }
  EXPECT_THROW(read_sequence_file(path), ValidationError);
  std::filesystem::remove(path);
  EXPECT_THROW(read_sequence_file(path), ValidationError);
}

TEST(SequenceSpec, Weights) {
  const auto& t = table();
  const auto lambda = weight_values("lambda", 1000, t);
  const auto mu = weight_values("mobius", 1000, t);
  const auto tm = weight_values("tm", 1000, t);
  const auto ones = weight_values("ones", 1000, t);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    EXPECT_EQ(lambda[n - 1], (oracle::big_omega(n) % 2) ? -1 : 1);
    EXPECT_EQ(mu[n - 1], oracle::mobius(n));
    EXPECT_EQ(tm[n - 1], 2 * thue_morse_bit(n) - 1);
    EXPECT_EQ(ones[n - 1], 1);
  }
  EXPECT_THROW(weight_values("zeta", 10, t), ValidationError);
}

TEST(Series, CountParsing) {
  EXPECT_EQ(parse_count("1e7"), 10000000u);
  EXPECT_EQ(parse_count("2.5e6"), 2500000u);
  EXPECT_EQ(parse_count("12345"), 12345u);
  EXPECT_THROW(parse_count("1.5"), ValidationError);
  EXPECT_THROW(parse_count("-3"), ValidationError);
  EXPECT_THROW(parse_count("abc"), ValidationError);
}

TEST(Series, Checkpoints) {
  EXPECT_EQ(geometric_checkpoints(100000),
            (std::vector<std::uint64_t>{1000, 3162, 10000, 31623, 100000}));
  EXPECT_EQ(geometric_checkpoints(5000), (std::vector<std::uint64_t>{1000, 3162, 5000}));
  EXPECT_EQ(parse_checkpoints("", 100000), geometric_checkpoints(100000));
  EXPECT_EQ(parse_checkpoints("10,20,30", 100), (std::vector<std::uint64_t>{10, 20, 30}));
  EXPECT_EQ(parse_checkpoints("geo:16:2:4", 1000), (std::vector<std::uint64_t>{16, 32, 64, 128}));
  EXPECT_THROW(parse_checkpoints("30,20", 100), ValidationError);
  EXPECT_THROW(parse_checkpoints("10,200", 100), ValidationError);
  EXPECT_THROW(parse_checkpoints("geo:16:1:4", 1000), ValidationError);
}
