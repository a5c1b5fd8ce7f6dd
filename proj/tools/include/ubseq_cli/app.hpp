#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ubseq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitAssert = 3,
};

struct ExperimentConfig {
  std::string command;
  std::string max_n = "1e6";
  std::string checkpoints;
  std::vector<std::string> thetas;
  std::string flow;
  std::string observable;
  std::string sequence;
  std::string mask;
  std::string start;
  std::string weights;
  std::uint64_t modulus = 0;
  std::optional<std::uint64_t> residue;
  double delta = 0.01;
  double epsilon = 0.05;
  std::uint64_t pairs = 64;
  std::uint64_t seed = 0;
  std::string output;
  std::string cache;
  unsigned threads = 0;
  bool assert_result = false;
  std::optional<double> target;
  double tolerance = 0.01;
};

/// Parses argv into a config. Throws ValidationError on bad flags.
/// Returns nullopt after printing help to `out`.
std::optional<ExperimentConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Runs one experiment. CSV goes to config.output (or `out` when empty),
/// diagnostics to `err`.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping for every error class.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ubseq::cli
