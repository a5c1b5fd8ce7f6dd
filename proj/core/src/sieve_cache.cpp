#include "ubseq/sieve_cache.hpp"

#include <array>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "ubseq/error.hpp"

namespace ubseq {

namespace {

constexpr std::array<char, 8> kMagic{'U', 'B', 'S', 'E', 'Q', '\0', 'v', '1'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t state) {
  const auto* bytes = static_cast<const std::uint8_t*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    state ^= bytes[i];
    state *= 0x100000001b3ull;
  }
  return state;
}

void write_sieve_cache(const std::string& path, const ArithmeticFunctionTable& table) {
  const std::uint64_t n = table.max_n();
  std::vector<std::uint8_t> buf;
  buf.reserve(16 + 3 * n + (n + 7) / 8 + 8);
  buf.insert(buf.end(), kMagic.begin(), kMagic.end());
  put_u64(buf, n);
  const auto big = table.big_omega_data().subspan(1);
  const auto small = table.small_omega_data().subspan(1);
  const auto mob = table.mobius_data().subspan(1);
  buf.insert(buf.end(), big.begin(), big.end());
  buf.insert(buf.end(), small.begin(), small.end());
  for (const std::int8_t m : mob) buf.push_back(static_cast<std::uint8_t>(m));
  const std::size_t sf_at = buf.size();
  buf.resize(sf_at + (n + 7) / 8, 0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (table.squarefree(k)) buf[sf_at + (k - 1) / 8] |= static_cast<std::uint8_t>(1u << ((k - 1) % 8));
  }
  put_u64(buf, fnv1a64(buf.data(), buf.size()));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open sieve cache '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error("failed writing sieve cache '" + path + "'");
}

ArithmeticFunctionTable read_sieve_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open sieve cache '" + path + "'");
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 24 || std::memcmp(buf.data(), kMagic.data(), kMagic.size()) != 0) {
    throw ChecksumError("sieve cache '" + path + "' has no valid header");
  }
  const std::uint64_t n = get_u64(buf.data() + 8);
  if (n < 1 || n > kMaxSieveN) throw ChecksumError("sieve cache '" + path + "' has a bad size field");
  const std::uint64_t expected = 16 + 3 * n + (n + 7) / 8 + 8;
  if (buf.size() != expected) {
    throw ChecksumError("sieve cache '" + path + "' is truncated or has trailing data");
  }
  const std::size_t body = buf.size() - 8;
  if (fnv1a64(buf.data(), body) != get_u64(buf.data() + body)) {
    throw ChecksumError("sieve cache '" + path + "' failed its checksum");
  }
  const std::uint8_t* p = buf.data() + 16;
  std::vector<std::uint8_t> big(n + 1, 0), small(n + 1, 0);
  std::vector<std::int8_t> mob(n + 1, 0);
  std::memcpy(big.data() + 1, p, n);
  std::memcpy(small.data() + 1, p + n, n);
  std::memcpy(mob.data() + 1, p + 2 * n, n);
  const std::span<const std::uint8_t> sf(p + 3 * n, (n + 7) / 8);
  try {
    return ArithmeticFunctionTable::from_arrays(std::move(big), std::move(small), std::move(mob), sf);
  } catch (const ValidationError& e) {
    throw ChecksumError("sieve cache '" + path + "' is inconsistent: " + e.what());
  }
}

ArithmeticFunctionTable load_or_build_sieve(const std::string& path, std::uint64_t max_n,
                                            std::ostream& warnings) {
  if (std::filesystem::exists(path)) {
    try {
      ArithmeticFunctionTable cached = read_sieve_cache(path);
      if (cached.max_n() == max_n) return cached;
      if (cached.max_n() > max_n) return cached.prefix(max_n);
    } catch (const ChecksumError& e) {
      warnings << "warning: " << e.what() << "; rebuilding\n";
    }
  }
  ArithmeticFunctionTable table = ArithmeticFunctionTable::build(max_n);
  write_sieve_cache(path, table);
  return table;
}

}  // namespace ubseq
