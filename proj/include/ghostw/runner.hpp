#pragma once

// Command runner behind the ghostw executable. Builds the algebra, runs the
// requested computations or check suites in dependency order and assembles
// a deterministic JSON report plus a human-readable summary.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ghostw {

/// Invalid command-line configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  /// "build", "compute" or "verify".
  std::string command;
  /// compute: center, anticenter, ghost, casimir, finite-w.
  /// verify: grading, pbw, hc, pinczon, theorem-a, modules, all.
  std::string target;
  int n = 1;
  /// Defaults to max(4, 2n + 1).
  std::optional<int> max_degree;
  std::uint64_t seed = 1;
  /// Sampled triples for the structure suite when it is not exhaustive.
  std::size_t structure_samples = 500;
  /// Sampled items for the PBW suite and random weights for modules.
  int samples = 100;
};

struct RunResult {
  /// 0 when every check passed, 1 otherwise.
  int exit_code = 0;
  nlohmann::json report;
  std::string summary;
};

int default_max_degree(int n);
/// Throws UsageError.
void validate(const RunConfig& config);
/// Throws UsageError on an invalid config.
RunResult run(const RunConfig& config);
/// Parses GHOSTW_THREADS; nullopt when unset. Throws UsageError unless it is a
/// positive integer.
std::optional<int> thread_cap_from_env();

/// report.dump(2) followed by a newline.
std::string render(const nlohmann::json& report);

}  // namespace ghostw
