#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ubseq/sieve.hpp"

namespace ubseq {

/// A set A of natural numbers restricted to [1, max_n], stored as a bitset.
class IndicatorSequence {
 public:
  IndicatorSequence(std::string name, std::uint64_t max_n);

  template <class Pred>
  static IndicatorSequence from_predicate(std::string name, std::uint64_t max_n, Pred&& pred) {
    IndicatorSequence ind(std::move(name), max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      if (pred(n)) ind.set(n);
    }
    return ind;
  }

  const std::string& name() const { return name_; }
  std::uint64_t max_n() const { return max_n_; }

  /// False outside [1, max_n].
  bool contains(std::uint64_t n) const {
    return n >= 1 && n <= max_n_ && ((bits_[n >> 6] >> (n & 63)) & 1u);
  }
  void set(std::uint64_t n, bool value = true);

  /// Number of members in [1, n], n clamped to max_n.
  std::uint64_t count_upto(std::uint64_t n) const;
  std::uint64_t count() const { return count_upto(max_n_); }

  std::span<const std::uint64_t> words() const { return bits_; }

 private:
  std::string name_;
  std::uint64_t max_n_;
  std::vector<std::uint64_t> bits_;
};

/// The named subsets of N studied here.
enum class IndicatorName {
  ThueMorse,         // TM: t(n) = 1
  RudinShapiro,      // RS: r(n) = 1
  EvenFactors,       // EF: Omega(n) even
  OddFactors,        // OF: Omega(n) odd
  SquareFree,        // SF
  EvenSquareFree,    // EF and SF
  OddSquareFree,     // OF and SF
};

IndicatorName parse_indicator_name(std::string_view text);
std::string_view to_string(IndicatorName name);

IndicatorSequence indicator_for(IndicatorName name, const ArithmeticFunctionTable& table);
IndicatorSequence indicator_for(std::string_view name, const ArithmeticFunctionTable& table);

/// Increasing listing a_1 < a_2 < ... of a set.
struct Subsequence {
  std::vector<std::uint64_t> values;
  std::string source;
};

/// Members of `ind` in increasing order. Throws ValidationError when empty.
Subsequence subsequence_of(const IndicatorSequence& ind);

}  // namespace ubseq
