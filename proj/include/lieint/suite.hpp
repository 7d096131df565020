#pragma once

#include <random>

#include "lieint/catalog.hpp"
#include "lieint/report.hpp"

namespace lieint {

enum class SuiteLevel { quick, full };

/// Uniform sample from the radius-r ball: normalized Gaussian direction
/// scaled by r u^{1/dim}.
Vec ball_sample(std::mt19937_64 &rng, int dim, double radius);

Vec unit_sample(std::mt19937_64 &rng, int dim);

/// Run every identity check against one catalog entry. Deterministic for a
/// fixed (entry, seed, level): each check derives its own generator from
/// the seed and the check name, so results do not depend on execution
/// order. LIE_INTEGRATE_THREADS caps check-level parallelism (default 1).
VerificationReport run_suite(const CatalogEntry &entry, std::uint64_t seed,
                             SuiteLevel level);

} // namespace lieint
