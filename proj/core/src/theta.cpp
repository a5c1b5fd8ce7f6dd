#include "ubseq/theta.hpp"

#include <array>
#include <charconv>
#include <numeric>

#include "ubseq/error.hpp"

namespace ubseq {

std::string to_hex(u128 x) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(32, '0');
  for (int i = 31; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[static_cast<unsigned>(x & 0xF)];
    x >>= 4;
  }
  return out;
}

u128 parse_hex128(std::string_view text) {
  if (text.size() != 32) {
    throw ValidationError("fixed-point angle needs exactly 32 hex digits, got '" +
                          std::string(text) + "'");
  }
  u128 x = 0;
  for (const char c : text) {
    unsigned digit = 0;
    if (c >= '0' && c <= '9') {
      digit = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      digit = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      digit = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw ValidationError("invalid hex digit in '" + std::string(text) + "'");
    }
    x = (x << 4) | digit;
  }
  return x;
}

Theta Theta::rational(std::uint64_t p, std::uint64_t q) {
  if (q == 0 || p >= q) {
    throw ValidationError("rational angle " + std::to_string(p) + "/" + std::to_string(q) +
                          " outside [0, 1)");
  }
  const std::uint64_t g = std::gcd(p, q);
  return p == 0 ? Theta(std::uint64_t{0}, std::uint64_t{1}) : Theta(p / g, q / g);
}

u128 Theta::to_fixed() const {
  if (!rational_) return frac_;
  // Long division of p * 2^128 by q, one quotient bit at a time.
  u128 remainder = p_;
  u128 quotient = 0;
  for (int bit = 0; bit < 128; ++bit) {
    remainder <<= 1;
    quotient <<= 1;
    if (remainder >= q_) {
      remainder -= q_;
      quotient |= 1;
    }
  }
  return quotient;
}

double Theta::to_double() const {
  return rational_ ? static_cast<double>(static_cast<long double>(p_) / q_) : unit_fraction(frac_);
}

std::string Theta::to_string() const {
  if (rational_) return "rat:" + std::to_string(p_) + "/" + std::to_string(q_);
  return "fix:" + to_hex(frac_);
}

namespace {

// Little-endian 64-bit limbs, enough for values below 2^320.
using Wide = std::array<std::uint64_t, 5>;

Wide square(u128 x) {
  const std::uint64_t limbs[2] = {lo64(x), hi64(x)};
  Wide out{};
  for (int i = 0; i < 2; ++i) {
    u128 carry = 0;
    for (int j = 0; j < 2; ++j) {
      const u128 cur = static_cast<u128>(limbs[i]) * limbs[j] + out[i + j] + carry;
      out[i + j] = lo64(cur);
      carry = cur >> 64;
    }
    for (int k = i + 2; carry != 0 && k < 5; ++k) {
      const u128 cur = static_cast<u128>(out[k]) + carry;
      out[k] = lo64(cur);
      carry = cur >> 64;
    }
  }
  return out;
}

// Adds b * x * 2^128.
void add_shifted(Wide& acc, u128 x, std::uint64_t b) {
  const u128 lo = static_cast<u128>(lo64(x)) * b;
  const u128 hi = static_cast<u128>(hi64(x)) * b;
  const u128 mid = static_cast<u128>(hi64(lo)) + lo64(hi);
  const std::uint64_t limbs[3] = {lo64(lo), lo64(mid), hi64(hi) + hi64(mid)};
  u128 carry = 0;
  for (int k = 0; k < 3; ++k) {
    const u128 cur = static_cast<u128>(acc[2 + k]) + limbs[k] + carry;
    acc[2 + k] = lo64(cur);
    carry = cur >> 64;
  }
}

bool at_most_two_pow_256(const Wide& v) {
  if (v[4] > 1) return false;
  if (v[4] == 0) return true;
  return v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0;
}

// Largest x in [0, 2^128) with x^2 + b * x * 2^128 <= 2^256, i.e. floor(2^128 * r)
// where r is the positive root of r^2 + b r - 1 = 0.
u128 quadratic_root_fraction(std::uint64_t b) {
  u128 x = 0;
  for (int bit = 127; bit >= 0; --bit) {
    const u128 candidate = x | (static_cast<u128>(1) << bit);
    Wide v = square(candidate);
    add_shifted(v, candidate, b);
    if (at_most_two_pow_256(v)) x = candidate;
  }
  return x;
}

}  // namespace

u128 golden_fraction() {
  static const u128 value = quadratic_root_fraction(1);
  return value;
}

u128 sqrt2m1_fraction() {
  static const u128 value = quadratic_root_fraction(2);
  return value;
}

Theta theta_parse(std::string_view text) {
  if (text == "golden") return Theta::fixed(golden_fraction());
  if (text == "sqrt2m1") return Theta::fixed(sqrt2m1_fraction());
  if (text.starts_with("rat:")) {
    const std::string_view body = text.substr(4);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
      throw ValidationError("rational angle must look like rat:p/q, got '" + std::string(text) + "'");
    }
    auto parse = [&](std::string_view part) {
      std::uint64_t v = 0;
      const auto* end = part.data() + part.size();
      const auto [ptr, ec] = std::from_chars(part.data(), end, v);
      if (part.empty() || ec != std::errc{} || ptr != end) {
        throw ValidationError("malformed rational angle '" + std::string(text) + "'");
      }
      return v;
    };
    const std::uint64_t p = parse(body.substr(0, slash));
    const std::uint64_t q = parse(body.substr(slash + 1));
    if (q == 0 || p == 0 || p >= q) {
      throw ValidationError("rational angle '" + std::string(text) + "' is not in (0, 1)");
    }
    return Theta::rational(p, q);
  }
  if (text.starts_with("fix:")) {
    const u128 frac = parse_hex128(text.substr(4));
    if (frac == 0) throw ValidationError("fixed-point angle must be nonzero");
    return Theta::fixed(frac);
  }
  throw ValidationError("unrecognised angle '" + std::string(text) +
                        "' (expected rat:p/q, fix:<hex>, golden or sqrt2m1)");
}

}  // namespace ubseq
