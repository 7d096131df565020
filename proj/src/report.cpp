#include "lieint/report.hpp"

#include <algorithm>

namespace lieint {

const char *kToleranceTableVersion = "1";

const std::map<std::string, double> &default_tolerances() {
  static const std::map<std::string, double> table{
      {"algebra_validation", 1e-12}, {"bch_oracle", 1e-9},
      {"bch_symmetry", 1e-10},       {"bch_cancellation", 1e-12},
      {"factorize_roundtrip", 1e-11}, {"logderiv_ray", 1e-12},
      {"logderiv_equivalence", 1e-8}, {"product_rule", 1e-7},
      {"structural_identity", 1e-6},  {"rep_validation", 1e-10},
      {"commutation", 1e-9},          {"constancy", 1e-9},
      {"duhamel", 1e-9},              {"fsss_pairing", 1e-10},
      {"derpath", 1e-7},              {"multiplicativity", 1e-8},
      {"ode", 1e-6},                  {"uniqueness", 1e-8},
      {"derived_rep", 1e-7},          {"unitarity", 1e-10}};
  return table;
}

std::uint64_t fnv1a(const std::string &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int VerificationReport::passed() const {
  int n = 0;
  for (const auto &r : records)
    n += r.pass ? 1 : 0;
  return n;
}

int VerificationReport::failed() const {
  return static_cast<int>(records.size()) - passed();
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["entry"] = entry;
  j["seed"] = seed;
  j["level"] = level;
  j["tolerance_table_version"] = kToleranceTableVersion;
  j["tolerances"] = tolerances;
  j["config"] = config;
  auto sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckRecord &a, const CheckRecord &b) {
              return a.name < b.name;
            });
  nlohmann::json recs = nlohmann::json::array();
  for (const auto &r : sorted) {
    nlohmann::json jr;
    jr["check_name"] = r.name;
    jr["input_digest"] = r.input_digest;
    jr["residual"] = r.residual;
    jr["tolerance"] = r.tolerance;
    jr["pass"] = r.pass;
    if (!r.error.empty())
      jr["error"] = r.error;
    if (include_timing)
      jr["wall_time"] = r.wall_time;
    recs.push_back(std::move(jr));
  }
  j["checks"] = std::move(recs);
  j["summary"] = {{"total", records.size()},
                  {"passed", passed()},
                  {"failed", failed()}};
  return j;
}

} // namespace lieint
