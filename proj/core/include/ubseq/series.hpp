#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ubseq {

/// One checkpoint of a real-valued convergence series.
struct SeriesPoint {
  std::uint64_t n = 0;
  double value = 0.0;

  bool operator==(const SeriesPoint&) const = default;
};

/// N_j = round(start * ratio^j) for j = 0, 1, ... while N_j <= max_n, deduplicated,
/// with max_n appended when it is not already the last entry.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t max_n, std::uint64_t start = 1000,
                                                 double ratio = 3.1622776601683795);

/// "geo:start:ratio:count" or an explicit comma list; an empty string selects the
/// default geometric schedule up to max_n. Entries above max_n are rejected.
std::vector<std::uint64_t> parse_checkpoints(std::string_view text, std::uint64_t max_n);

/// Parses non-negative integers in decimal or scientific shorthand ("1e7", "2.5e6").
std::uint64_t parse_count(std::string_view text);

}  // namespace ubseq
