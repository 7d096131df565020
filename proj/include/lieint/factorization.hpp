#pragma once

#include <map>
#include <mutex>
#include <stdexcept>

#include "lieint/bch.hpp"

namespace lieint {

struct NewtonConfig {
  int max_iter = 50;
  double residual_tol = 1e-12;
  double step_tol = 1e-13;
  double jacobian_step = 1e-7; // forward differences
  int max_halvings = 8;
  /// Iterates whose full-algebra norm exceeds this leave the chart.
  double domain_radius = 1.5;
};

/// One point of the chart: z = x_1 * ... * x_n with x_j in block j.
struct ChartPoint {
  std::vector<Vec> components;
  double residual = 0.0;
};

/// Newton left the chart (divergence, singular Jacobian, or runaway
/// iterates). Carries the last iterate for diagnosis.
class ChartOutOfRange : public std::runtime_error {
public:
  ChartOutOfRange(const std::string &msg, ChartPoint last, double t = 0.0)
      : std::runtime_error(msg), last_iterate(std::move(last)), at_t(t) {}
  ChartPoint last_iterate;
  double at_t;
};

/// Solve z = x_1 * ... * x_n for block components near 0. Seeded with the
/// block projection of z (the chart differential at 0 is the identity).
ChartPoint factorize(const LieAlgebra &L, const Decomposition &D, const Vec &z,
                     const BchConfig &bch_cfg = {},
                     const NewtonConfig &newton_cfg = {});

/// Warm-started seed variant used for path continuation.
ChartPoint factorize_seeded(const LieAlgebra &L, const Decomposition &D,
                            const Vec &z, const Vec &seed_coords,
                            const BchConfig &bch_cfg,
                            const NewtonConfig &newton_cfg);

/// The factorized path t -> (x_1(t), ..., x_n(t)) with
/// (tx)*y = x_1(t)*...*x_n(t). Samples are cached and reused as Newton warm
/// starts; the cache is guarded by a mutex so concurrent reads are safe.
class FactorizedPath {
public:
  FactorizedPath(AlgebraPtr algebra, Decomposition decomposition, Vec x, Vec y,
                 BchConfig bch_cfg = {}, NewtonConfig newton_cfg = {},
                 double derivative_step = 1e-5);

  ChartPoint at(double t) const;

  /// Richardson-extrapolated central difference of component j (one-sided
  /// at the interval endpoints, taken as [0, 1]).
  Vec component_derivative(double t, int j) const;

  /// Plain central difference at an explicit step, for refinement studies.
  Vec component_derivative_plain(double t, int j, double h) const;

  int num_blocks() const { return decomposition_.num_blocks(); }
  double derivative_step() const { return derivative_step_; }
  const Decomposition &decomposition() const { return decomposition_; }

private:
  Vec target(double t) const; // bch(t x, y)
  Vec coords_of(const ChartPoint &p) const;

  AlgebraPtr algebra_;
  Decomposition decomposition_;
  Vec x_, y_;
  BchConfig bch_cfg_;
  NewtonConfig newton_cfg_;
  double derivative_step_;
  /// Consecutive cached targets are kept within this distance so every
  /// warm start lands in Newton's quadratic basin.
  double continuation_step_ = 0.05;
  mutable std::mutex cache_mutex_;
  mutable std::map<double, ChartPoint> cache_;
};

} // namespace lieint
