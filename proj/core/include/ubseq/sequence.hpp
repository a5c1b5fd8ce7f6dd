#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ubseq/indicator.hpp"
#include "ubseq/sieve.hpp"

namespace ubseq {

namespace seq {
struct BigOmega {};
struct SmallOmega {};
struct Identity {};
/// P(n) = sum_k coefficients[k] * n^k.
struct Poly {
  std::vector<std::uint64_t> coefficients;
};
struct SubseqOf {
  IndicatorName indicator;
};
struct FromFile {
  std::string path;
};
}  // namespace seq

/// Which arithmetic sequence (a_n) an experiment runs along.
using SequenceSpec =
    std::variant<seq::BigOmega, seq::SmallOmega, seq::Identity, seq::Poly, seq::SubseqOf, seq::FromFile>;

/// Accepts: omega | smallomega | n | poly:c0,c1,... | tm | rs | ef | of | sf | efsf | ofsf |
/// file:<path>.
SequenceSpec parse_sequence_spec(std::string_view text);
std::string to_string(const SequenceSpec& spec);

/// Sieve size that is expected to cover the first N terms of `spec`.
std::uint64_t suggested_sieve_size(const SequenceSpec& spec, std::uint64_t N);

/// a_1..a_N. Throws ValidationError when the table has fewer than N members of
/// the requested indicator, when N exceeds the table range for Omega-type
/// sequences, or when a polynomial value overflows 64 bits.
std::vector<std::uint64_t> sequence_values(const SequenceSpec& spec, std::uint64_t N,
                                           const ArithmeticFunctionTable& table);

/// One positive decimal integer per line; blank lines ignored.
std::vector<std::uint64_t> read_sequence_file(const std::string& path);

/// Signed weights c_n in {-1, 0, +1} for n = 1..N.
/// Accepts: tm | rs | ef | of (c = 2t - 1), lambda, mobius, ones.
std::vector<std::int8_t> weight_values(std::string_view name, std::uint64_t N,
                                       const ArithmeticFunctionTable& table);

}  // namespace ubseq
