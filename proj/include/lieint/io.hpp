#pragma once

#include <optional>

#include <json.hpp>

#include "lieint/representation.hpp"

namespace lieint {

/// Input files failed to parse or violate the schema. Carries a location
/// hint when one is available.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<Decomposition> decomposition; // absent: trivial one-block
};

/// { "dim": int, "basis": [names], "brackets": [[i, j, k, value], ...],
///   "decomposition": [[block column vectors], ...] }  (0-based indices)
AlgebraFile algebra_from_json(const nlohmann::json &j,
                              const std::string &name_hint = "algebra");
AlgebraFile load_algebra_file(const std::string &path);

nlohmann::json algebra_to_json(const LieAlgebra &L,
                               const Decomposition *dec = nullptr);

/// { "algebra": name-ref, "dim_H": int, "matrices": [[row-major reals]...],
///   "skew": bool }
Representation representation_from_json(const nlohmann::json &j,
                                        AlgebraPtr algebra);
Representation load_representation_file(const std::string &path,
                                        AlgebraPtr algebra);

void write_json_file(const std::string &path, const nlohmann::json &j);

} // namespace lieint
