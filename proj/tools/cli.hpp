#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "navskel/contraction.hpp"
#include "navskel/generators.hpp"

namespace navskel::cli {

enum class Command {
  kInfo,
  kSearchInfo,
  kContract,
  kMinimize,
  kEstimate,
  kRandomize,
  kGen,
  kTreeScaling,
  kFit,
};

enum class OutputFormat { kJson, kCsv, kDot, kEdges };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::kInfo;
  /// "-" reads standard input.
  std::string input_path = "-";
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  /// Unset: random for `contract`, degree-sum for `estimate`.
  std::optional<OrderingKind> strategy;
  /// Unset: edge list for `gen`/`randomize`, JSON otherwise.
  std::optional<OutputFormat> format;
  bool pairs = false;
  std::vector<std::pair<std::string, double>> constants_overrides;
  std::optional<std::string> partition_path;
  unsigned threads = 0;

  // gen
  std::string gen_kind;
  std::uint64_t gen_n = 0;
  double gen_p = 0.1;
  std::uint64_t gen_chords = 0;
  TreeEnsemble ensemble = TreeEnsemble::kUniform;

  // randomize; unset means 10 * L
  std::optional<std::uint64_t> swap_attempts;

  // tree-scaling
  TreeScalingConfig scaling;
};

struct ParseResult {
  std::optional<RunConfig> config;
  /// Meaningful when `config` is empty: 0 after --help, 2 on usage errors.
  int exit_code = kExitOk;
};

/// Parses a command line. Usage errors and help text go to `err`/`out`.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs one command, writing exactly one document to `out` and diagnostics
/// to `err`. Returns the process exit status.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace navskel::cli
