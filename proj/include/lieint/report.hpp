#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace lieint {

struct CheckRecord {
  std::string name;
  std::string input_digest;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time = 0.0; // seconds
  std::string error;      // non-empty when the check aborted
};

/// Machine-readable outcome of a verification run. Records are kept sorted
/// by name so report assembly is order-independent.
struct VerificationReport {
  std::string entry;
  std::uint64_t seed = 0;
  std::string level;
  std::vector<CheckRecord> records;
  std::map<std::string, double> tolerances; // versioned defaults table
  std::map<std::string, std::string> config;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  nlohmann::json to_json(bool include_timing = true) const;
};

/// Versioned default tolerance per check kind.
const std::map<std::string, double> &default_tolerances();
extern const char *kToleranceTableVersion;

/// FNV-1a over a string; stable across platforms, used for input digests
/// and per-check seed derivation.
std::uint64_t fnv1a(const std::string &s);

} // namespace lieint
