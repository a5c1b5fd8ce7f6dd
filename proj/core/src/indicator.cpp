#include "ubseq/indicator.hpp"

#include <bit>
#include <cctype>
#include <string>

#include "ubseq/automatic.hpp"
#include "ubseq/error.hpp"

namespace ubseq {

IndicatorSequence::IndicatorSequence(std::string name, std::uint64_t max_n)
    : name_(std::move(name)), max_n_(max_n), bits_(max_n / 64 + 1, 0) {}

void IndicatorSequence::set(std::uint64_t n, bool value) {
  if (n < 1 || n > max_n_) {
    throw ValidationError("indicator index " + std::to_string(n) + " outside [1, " +
                          std::to_string(max_n_) + "]");
  }
  const std::uint64_t mask = std::uint64_t{1} << (n & 63);
  if (value) {
    bits_[n >> 6] |= mask;
  } else {
    bits_[n >> 6] &= ~mask;
  }
}

std::uint64_t IndicatorSequence::count_upto(std::uint64_t n) const {
  if (n > max_n_) n = max_n_;
  if (n == 0) return 0;
  const std::uint64_t last_word = n >> 6;
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < last_word; ++w) total += std::popcount(bits_[w]);
  const unsigned keep = static_cast<unsigned>(n & 63) + 1;
  const std::uint64_t mask = keep == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << keep) - 1;
  total += std::popcount(bits_[last_word] & mask);
  return total;
}

namespace {

struct NameEntry {
  std::string_view text;
  IndicatorName name;
};

constexpr NameEntry kNames[] = {
    {"tm", IndicatorName::ThueMorse},     {"rs", IndicatorName::RudinShapiro},
    {"ef", IndicatorName::EvenFactors},   {"of", IndicatorName::OddFactors},
    {"sf", IndicatorName::SquareFree},    {"efsf", IndicatorName::EvenSquareFree},
    {"ofsf", IndicatorName::OddSquareFree},
};

}  // namespace

IndicatorName parse_indicator_name(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& e : kNames) {
    if (e.text == lower) return e.name;
  }
  throw ValidationError("unknown indicator '" + std::string(text) +
                        "' (expected tm, rs, ef, of, sf, efsf or ofsf)");
}

std::string_view to_string(IndicatorName name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.text;
  }
  return "?";
}

IndicatorSequence indicator_for(IndicatorName name, const ArithmeticFunctionTable& table) {
  const std::uint64_t max_n = table.max_n();
  std::string label(to_string(name));
  switch (name) {
    case IndicatorName::ThueMorse:
      return IndicatorSequence::from_predicate(label, max_n,
                                               [](std::uint64_t n) { return thue_morse_bit(n) == 1; });
    case IndicatorName::RudinShapiro:
      return IndicatorSequence::from_predicate(
          label, max_n, [](std::uint64_t n) { return rudin_shapiro_bit(n) == 1; });
    case IndicatorName::EvenFactors:
      return IndicatorSequence::from_predicate(
          label, max_n, [&](std::uint64_t n) { return (table.big_omega(n) & 1u) == 0; });
    case IndicatorName::OddFactors:
      return IndicatorSequence::from_predicate(
          label, max_n, [&](std::uint64_t n) { return (table.big_omega(n) & 1u) == 1; });
    case IndicatorName::SquareFree:
      return IndicatorSequence::from_predicate(label, max_n,
                                               [&](std::uint64_t n) { return table.squarefree(n); });
    case IndicatorName::EvenSquareFree:
      return IndicatorSequence::from_predicate(label, max_n, [&](std::uint64_t n) {
        return table.squarefree(n) && (table.big_omega(n) & 1u) == 0;
      });
    case IndicatorName::OddSquareFree:
      return IndicatorSequence::from_predicate(label, max_n, [&](std::uint64_t n) {
        return table.squarefree(n) && (table.big_omega(n) & 1u) == 1;
      });
  }
  throw ValidationError("unhandled indicator");
}

IndicatorSequence indicator_for(std::string_view name, const ArithmeticFunctionTable& table) {
  return indicator_for(parse_indicator_name(name), table);
}

Subsequence subsequence_of(const IndicatorSequence& ind) {
  Subsequence out;
  out.source = ind.name();
  const auto words = ind.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const std::uint64_t n = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
      bits &= bits - 1;
      if (n >= 1 && n <= ind.max_n()) out.values.push_back(n);
    }
  }
  if (out.values.empty()) {
    throw ValidationError("indicator '" + ind.name() + "' has no members in [1, " +
                          std::to_string(ind.max_n()) + "]");
  }
  return out;
}

}  // namespace ubseq
