#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ghostw {

/// Outcome of one named identity check.
struct CheckResult {
  std::string name;
  bool passed = false;
  /// Counterexample or supporting data, empty when there is nothing to say.
  std::string witness;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

inline nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j{{"name", r.name}, {"status", r.passed ? "pass" : "fail"}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace ghostw
