#include "ubseq/series.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "ubseq/error.hpp"

namespace ubseq {

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t max_n, std::uint64_t start,
                                                 double ratio) {
  if (max_n == 0) throw ValidationError("checkpoint schedule needs max_n >= 1");
  if (start == 0 || !(ratio > 1.0)) {
    throw ValidationError("geometric schedule needs start >= 1 and ratio > 1");
  }
  std::vector<std::uint64_t> out;
  for (int j = 0;; ++j) {
    const double v = std::round(static_cast<double>(start) * std::pow(ratio, j));
    if (v > static_cast<double>(max_n)) break;
    const auto n = static_cast<std::uint64_t>(v);
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  if (out.empty() || out.back() != max_n) out.push_back(max_n);
  return out;
}

std::uint64_t parse_count(std::string_view text) {
  if (text.empty()) throw ValidationError("empty number");
  std::uint64_t exact = 0;
  const auto* end = text.data() + text.size();
  if (auto [ptr, ec] = std::from_chars(text.data(), end, exact); ec == std::errc{} && ptr == end) {
    return exact;
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !(value >= 0.0) || value > 1.8e19 ||
      value != std::floor(value)) {
    throw ValidationError("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<std::uint64_t> parse_checkpoints(std::string_view text, std::uint64_t max_n) {
  if (text.empty()) return geometric_checkpoints(max_n);
  std::vector<std::uint64_t> out;
  if (text.starts_with("geo:")) {
    std::string_view rest = text.substr(4);
    std::vector<std::string_view> parts;
    while (true) {
      const auto colon = rest.find(':');
      parts.push_back(rest.substr(0, colon));
      if (colon == std::string_view::npos) break;
      rest.remove_prefix(colon + 1);
    }
    if (parts.size() != 3) {
      throw ValidationError("checkpoint schedule must look like geo:start:ratio:count");
    }
    const std::uint64_t start = parse_count(parts[0]);
    double ratio = 0.0;
    const auto* rend = parts[1].data() + parts[1].size();
    if (auto [ptr, ec] = std::from_chars(parts[1].data(), rend, ratio);
        ec != std::errc{} || ptr != rend || !(ratio > 1.0)) {
      throw ValidationError("geometric ratio must be a number > 1");
    }
    const std::uint64_t count = parse_count(parts[2]);
    if (start == 0 || count == 0) throw ValidationError("geo schedule needs start, count >= 1");
    for (std::uint64_t j = 0; j < count; ++j) {
      const double v = std::round(static_cast<double>(start) * std::pow(ratio, static_cast<double>(j)));
      const auto n = static_cast<std::uint64_t>(v);
      if (out.empty() || n > out.back()) out.push_back(n);
    }
  } else {
    std::string_view rest = text;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::uint64_t n = parse_count(rest.substr(0, comma));
      if (n == 0 || (!out.empty() && n <= out.back())) {
        throw ValidationError("checkpoints must be positive and strictly increasing");
      }
      out.push_back(n);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  if (out.empty()) throw ValidationError("empty checkpoint list");
  if (out.back() > max_n) {
    throw ValidationError("checkpoint " + std::to_string(out.back()) + " exceeds --max " +
                          std::to_string(max_n));
  }
  return out;
}

}  // namespace ubseq
