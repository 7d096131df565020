#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "lieint/algebra.hpp"

namespace lieint {

struct BchConfig {
  int max_order = 12;
  double term_tolerance = 1e-14;
  /// Per-operand radius; the classical sufficient bound for Dynkin-series
  /// convergence is ||x|| + ||y|| < ln 2.
  double domain_radius = 0.5 * std::numbers::ln2_v<double>;
};

struct BchResult {
  Vec value;
  bool domain_warning = false; // operands left the convergence ball
  int orders_used = 0;
  double last_term_norm = 0.0;
};

/// Dynkin series for log(e^x e^y), truncated at max_order or when an
/// order's contribution drops below term_tolerance.
BchResult bch_full(const LieAlgebra &L, const Vec &x, const Vec &y,
                   const BchConfig &cfg = {});

Vec bch(const LieAlgebra &L, const Vec &x, const Vec &y,
        const BchConfig &cfg = {});

/// Left fold x_1 * x_2 * ... * x_n.
BchResult bch_multi_full(const LieAlgebra &L, const std::vector<Vec> &xs,
                         const BchConfig &cfg = {});

Vec bch_multi(const LieAlgebra &L, const std::vector<Vec> &xs,
              const BchConfig &cfg = {});

/// The right-translation chart differential D rho_x(0): y -> d/de|_0 (e y)*x,
/// assembled columnwise by Richardson-extrapolated central differences of
/// the series.
Mat bch_differential_at_zero_right(const LieAlgebra &L, const Vec &x,
                                   const BchConfig &cfg = {});

namespace detail {
/// Per-order table of (word, coefficient) pairs for the Dynkin series.
/// Letter t of a word is bit t: 0 = x, 1 = y. Coefficients are computed
/// with exact rational arithmetic and cached process-wide.
const std::vector<std::pair<std::uint32_t, double>> &
dynkin_terms(int order);
} // namespace detail

} // namespace lieint
