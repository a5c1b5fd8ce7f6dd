#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ubseq/error.hpp"
#include "ubseq/sieve_cache.hpp"

using namespace ubseq;
namespace fs = std::filesystem;

namespace {

class SieveCache : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ubseq_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const char* name) const { return (dir_ / name).string(); }

  static std::vector<char> bytes(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  static void put(const std::string& p, const std::vector<char>& b) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(b.data(), static_cast<std::streamsize>(b.size()));
  }

  fs::path dir_;
};

// Straight transcription of the published FNV-1a parameters.
std::uint64_t fnv_reference(const std::vector<char>& b, std::size_t len) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<unsigned char>(b[i]);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TEST_F(SieveCache, RoundTrip) {
  const auto t = ArithmeticFunctionTable::build(100000);
  write_sieve_cache(path("c.bin"), t);
  EXPECT_EQ(read_sieve_cache(path("c.bin")), t);
}

TEST_F(SieveCache, Layout) {
  const std::uint64_t n = 1001;
  const auto t = ArithmeticFunctionTable::build(n);
  write_sieve_cache(path("c.bin"), t);
  const auto b = bytes(path("c.bin"));
  ASSERT_EQ(b.size(), 8 + 8 + 3 * n + (n + 7) / 8 + 8);
  EXPECT_EQ(std::string(b.data(), 8), std::string("UBSEQ\0v1", 8));
  std::uint64_t stored_n = 0;
  for (int i = 7; i >= 0; --i) stored_n = (stored_n << 8) | static_cast<unsigned char>(b[8 + i]);
  EXPECT_EQ(stored_n, n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    ASSERT_EQ(static_cast<unsigned char>(b[16 + k - 1]), t.big_omega(k));
    ASSERT_EQ(static_cast<unsigned char>(b[16 + n + k - 1]), t.small_omega(k));
    ASSERT_EQ(static_cast<signed char>(b[16 + 2 * n + k - 1]), t.mobius(k));
    const bool bit = (static_cast<unsigned char>(b[16 + 3 * n + (k - 1) / 8]) >> ((k - 1) % 8)) & 1;
    ASSERT_EQ(bit, t.squarefree(k));
  }
  const std::size_t body = b.size() - 8;
  std::uint64_t stored_hash = 0;
  for (int i = 7; i >= 0; --i) stored_hash = (stored_hash << 8) | static_cast<unsigned char>(b[body + i]);
  EXPECT_EQ(stored_hash, fnv_reference(b, body));
  EXPECT_EQ(fnv1a64("a", 1), 0xaf63dc4c8601ec8cull);
}

TEST_F(SieveCache, TruncatedFileFailsChecksum) {
  write_sieve_cache(path("c.bin"), ArithmeticFunctionTable::build(5000));
  auto b = bytes(path("c.bin"));
  b.resize(b.size() - 3);
  put(path("c.bin"), b);
  EXPECT_THROW(read_sieve_cache(path("c.bin")), ChecksumError);
  b.resize(10);
  put(path("c.bin"), b);
  EXPECT_THROW(read_sieve_cache(path("c.bin")), ChecksumError);
}

TEST_F(SieveCache, FlippedByteFailsChecksum) {
  write_sieve_cache(path("c.bin"), ArithmeticFunctionTable::build(5000));
  auto b = bytes(path("c.bin"));
  b[100] ^= 1;
  put(path("c.bin"), b);
  EXPECT_THROW(read_sieve_cache(path("c.bin")), ChecksumError);
}

TEST_F(SieveCache, BadMagicAndMissingFile) {
  write_sieve_cache(path("c.bin"), ArithmeticFunctionTable::build(5000));
  auto b = bytes(path("c.bin"));
  b[7] = '2';
  put(path("c.bin"), b);
  EXPECT_THROW(read_sieve_cache(path("c.bin")), ChecksumError);
  EXPECT_THROW(read_sieve_cache(path("missing.bin")), Error);
}

TEST_F(SieveCache, ServesPrefixFromLargerCache) {
  write_sieve_cache(path("c.bin"), ArithmeticFunctionTable::build(100000));
  const auto before = bytes(path("c.bin"));
  std::ostringstream warnings;
  const auto t = load_or_build_sieve(path("c.bin"), 40000, warnings);
  EXPECT_EQ(t, ArithmeticFunctionTable::build(40000));
  EXPECT_EQ(bytes(path("c.bin")), before);
  EXPECT_TRUE(warnings.str().empty());
}

TEST_F(SieveCache, GrowsWhenTooSmall) {
  write_sieve_cache(path("c.bin"), ArithmeticFunctionTable::build(1000));
  std::ostringstream warnings;
  EXPECT_EQ(load_or_build_sieve(path("c.bin"), 5000, warnings).max_n(), 5000u);
  EXPECT_EQ(read_sieve_cache(path("c.bin")).max_n(), 5000u);
}

TEST_F(SieveCache, CorruptCacheIsRebuiltWithWarning) {
  write_sieve_cache(path("c.bin"), ArithmeticFunctionTable::build(5000));
  auto b = bytes(path("c.bin"));
  b[40] ^= 0x7f;
  put(path("c.bin"), b);
  std::ostringstream warnings;
  const auto t = load_or_build_sieve(path("c.bin"), 5000, warnings);
  EXPECT_EQ(t, ArithmeticFunctionTable::build(5000));
  EXPECT_NE(warnings.str().find("checksum"), std::string::npos);
  EXPECT_EQ(read_sieve_cache(path("c.bin")), t);
}
