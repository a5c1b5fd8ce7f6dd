#include "ubseq/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <string>

#include "ubseq/automatic.hpp"
#include "ubseq/error.hpp"

namespace ubseq {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ValidationError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

void require_table_range(std::uint64_t N, const ArithmeticFunctionTable& table) {
  if (N > table.max_n()) {
    throw ValidationError("requested " + std::to_string(N) + " terms but the sieve covers only " +
                          std::to_string(table.max_n()));
  }
}

std::uint64_t poly_value(const std::vector<std::uint64_t>& coefficients, std::uint64_t n) {
  // Horner with overflow checks.
  std::uint64_t acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    if (__builtin_mul_overflow(acc, n, &acc) || __builtin_add_overflow(acc, *it, &acc)) {
      throw ValidationError("polynomial value overflows 64 bits at n=" + std::to_string(n));
    }
  }
  return acc;
}

}  // namespace

SequenceSpec parse_sequence_spec(std::string_view text) {
  const std::string lower = lowercase(text);
  if (lower == "omega" || lower == "bigomega") return seq::BigOmega{};
  if (lower == "smallomega") return seq::SmallOmega{};
  if (lower == "n" || lower == "identity") return seq::Identity{};
  if (lower.starts_with("poly:")) {
    seq::Poly poly;
    std::string_view rest = std::string_view(text).substr(5);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      poly.coefficients.push_back(parse_u64(rest.substr(0, comma), "polynomial coefficient"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (poly.coefficients.empty()) throw ValidationError("polynomial needs at least one coefficient");
    return poly;
  }
  if (lower.starts_with("file:")) {
    const std::string path(text.substr(5));
    if (path.empty()) throw ValidationError("file sequence needs a path");
    return seq::FromFile{path};
  }
  return seq::SubseqOf{parse_indicator_name(lower)};
}

std::string to_string(const SequenceSpec& spec) {
  return std::visit(
      Overloaded{
          [](const seq::BigOmega&) { return std::string("omega"); },
          [](const seq::SmallOmega&) { return std::string("smallomega"); },
          [](const seq::Identity&) { return std::string("n"); },
          [](const seq::Poly& p) {
            std::string out = "poly:";
            for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
              if (i) out += ',';
              out += std::to_string(p.coefficients[i]);
            }
            return out;
          },
          [](const seq::SubseqOf& s) { return std::string(to_string(s.indicator)); },
          [](const seq::FromFile& f) { return "file:" + f.path; },
      },
      spec);
}

std::uint64_t suggested_sieve_size(const SequenceSpec& spec, std::uint64_t N) {
  double factor = 1.0;
  if (const auto* s = std::get_if<seq::SubseqOf>(&spec)) {
    switch (s->indicator) {
      case IndicatorName::SquareFree:
        factor = 1.66;
        break;
      case IndicatorName::EvenSquareFree:
      case IndicatorName::OddSquareFree:
        factor = 3.33;
        break;
      default:
        factor = 2.05;
        break;
    }
  }
  const double want = factor * static_cast<double>(N) + 64.0;
  if (want >= static_cast<double>(kMaxSieveN)) return kMaxSieveN;
  return std::max<std::uint64_t>(2, static_cast<std::uint64_t>(want));
}

std::vector<std::uint64_t> sequence_values(const SequenceSpec& spec, std::uint64_t N,
                                           const ArithmeticFunctionTable& table) {
  std::vector<std::uint64_t> out;
  std::visit(
      Overloaded{
          [&](const seq::BigOmega&) {
            require_table_range(N, table);
            out.resize(N);
            for (std::uint64_t n = 1; n <= N; ++n) out[n - 1] = table.big_omega(n);
          },
          [&](const seq::SmallOmega&) {
            require_table_range(N, table);
            out.resize(N);
            for (std::uint64_t n = 1; n <= N; ++n) out[n - 1] = table.small_omega(n);
          },
          [&](const seq::Identity&) {
            out.resize(N);
            for (std::uint64_t n = 1; n <= N; ++n) out[n - 1] = n;
          },
          [&](const seq::Poly& p) {
            out.resize(N);
            for (std::uint64_t n = 1; n <= N; ++n) out[n - 1] = poly_value(p.coefficients, n);
          },
          [&](const seq::SubseqOf& s) {
            const Subsequence sub = subsequence_of(indicator_for(s.indicator, table));
            if (sub.values.size() < N) {
              throw ValidationError("indicator '" + sub.source + "' has only " +
                                    std::to_string(sub.values.size()) + " members up to " +
                                    std::to_string(table.max_n()) + ", need " + std::to_string(N));
            }
            out.assign(sub.values.begin(), sub.values.begin() + static_cast<std::ptrdiff_t>(N));
          },
          [&](const seq::FromFile& f) {
            out = read_sequence_file(f.path);
            if (out.size() < N) {
              throw ValidationError("file '" + f.path + "' has only " + std::to_string(out.size()) +
                                    " values, need " + std::to_string(N));
            }
            out.resize(N);
          },
      },
      spec);
  return out;
}

std::vector<std::uint64_t> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open sequence file '" + path + "'");
  std::vector<std::uint64_t> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    const std::string_view token(line.data() + first, last - first + 1);
    const std::uint64_t v = parse_u64(token, "value on line " + std::to_string(line_no));
    if (v == 0) {
      throw ValidationError("sequence file values must be positive (line " +
                            std::to_string(line_no) + ")");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::int8_t> weight_values(std::string_view name, std::uint64_t N,
                                       const ArithmeticFunctionTable& table) {
  const std::string lower = lowercase(name);
  std::vector<std::int8_t> out(N);
  auto fill = [&](auto&& weight) {
    for (std::uint64_t n = 1; n <= N; ++n) out[n - 1] = static_cast<std::int8_t>(weight(n));
  };
  if (lower == "tm") {
    fill([](std::uint64_t n) { return 2 * thue_morse_bit(n) - 1; });
  } else if (lower == "rs") {
    fill([](std::uint64_t n) { return 2 * rudin_shapiro_bit(n) - 1; });
  } else if (lower == "ones") {
    fill([](std::uint64_t) { return 1; });
  } else if (lower == "lambda" || lower == "liouville" || lower == "ef") {
    require_table_range(N, table);
    fill([&](std::uint64_t n) { return table.liouville(n); });
  } else if (lower == "of") {
    require_table_range(N, table);
    fill([&](std::uint64_t n) { return -table.liouville(n); });
  } else if (lower == "mobius" || lower == "mu") {
    require_table_range(N, table);
    fill([&](std::uint64_t n) { return table.mobius(n); });
  } else {
    throw ValidationError("unknown weight sequence '" + std::string(name) +
                          "' (expected tm, rs, ef, of, lambda, mobius or ones)");
  }
  return out;
}

}  // namespace ubseq
