#pragma once

#include <optional>

#include "lieint/integrator.hpp"

namespace lieint {

/// A built-in fixture: algebra, chart decompositions, representations, and
/// (when one exists) a faithful matrix realization used by the exp/log
/// oracles. Every entry is re-validated at load time.
struct CatalogEntry {
  std::string name;
  AlgebraPtr algebra;
  std::vector<Decomposition> decompositions;
  std::vector<Representation> representations;
  std::optional<Representation> faithful; // oracle realization
  std::string notes;

  const Decomposition &decomposition(const std::string &name) const;
  const Representation &representation(const std::string &name) const;
};

/// Built-in fixtures: so3, su2-realified, heisenberg3, sl2,
/// upper-triangular-3, abelian-4. Throws if any fixture fails validation.
std::vector<CatalogEntry> load_catalog();

const CatalogEntry &find_entry(const std::vector<CatalogEntry> &catalog,
                               const std::string &name);

/// so3 with one defining-representation entry perturbed by 1e-3: the
/// negative control. Fails homomorphism validation by construction and is
/// deliberately not part of load_catalog().
CatalogEntry make_broken_so3();

} // namespace lieint
