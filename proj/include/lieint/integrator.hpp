#pragma once

#include "lieint/representation.hpp"

namespace lieint {

/// The local group representation pi(z) = e^{a(z_1)} ... e^{a(z_n)} built
/// from a validated algebra representation and a chart decomposition.
/// Defined only on the chart; out-of-chart arguments raise ChartOutOfRange.
class LocalRepresentation {
public:
  LocalRepresentation(Representation rep, Decomposition dec,
                      BchConfig bch_cfg = {}, NewtonConfig newton_cfg = {});

  const Representation &rep() const { return rep_; }
  const Decomposition &decomposition() const { return dec_; }
  const BchConfig &bch_config() const { return bch_cfg_; }
  const NewtonConfig &newton_config() const { return newton_cfg_; }

  /// Skips representation validation; for negative controls only.
  static LocalRepresentation unchecked(Representation rep, Decomposition dec,
                                       BchConfig bch_cfg = {},
                                       NewtonConfig newton_cfg = {});

  Mat pi(const Vec &z) const;

  /// Largest ||z|| for which factorization has succeeded so far. Updated by
  /// pi on success; meaningful for single-threaded use.
  double chart_radius() const { return chart_radius_; }

private:
  struct Unchecked {};
  LocalRepresentation(Representation rep, Decomposition dec, BchConfig bch_cfg,
                      NewtonConfig newton_cfg, Unchecked);

  Representation rep_;
  Decomposition dec_;
  BchConfig bch_cfg_;
  NewtonConfig newton_cfg_;
  mutable double chart_radius_ = 0.0;
};

/// || pi(x*y) - pi(x) pi(y) || in the operator 2-norm.
double multiplicativity_residual(const LocalRepresentation &LR, const Vec &x,
                                 const Vec &y);

/// Max over the grid of || d/dt pi((tx)*y) v - a(x) pi((tx)*y) v || with the
/// derivative taken by Richardson finite differences.
double ode_residual(const LocalRepresentation &LR, const Vec &x, const Vec &y,
                    const Vec &v, const std::vector<double> &grid,
                    double fd_step = 1e-4);

/// Plain central-difference variant at explicit step h.
double ode_residual_plain(const LocalRepresentation &LR, const Vec &x,
                          const Vec &y, const Vec &v,
                          const std::vector<double> &grid, double h);

/// Max over the grid of || pi((tx)*y) v - e^{t a(x)} pi(y) v ||: both sides
/// solve the same initial value problem.
double uniqueness_check(const LocalRepresentation &LR, const Vec &x,
                        const Vec &y, const Vec &v,
                        const std::vector<double> &grid);

/// || d/dt|_0 pi(tx) v - a(x) v ||: differentiating pi recovers the algebra
/// representation.
double derived_rep_residual(const LocalRepresentation &LR, const Vec &x,
                            const Vec &v, double fd_step = 1e-4);

std::vector<double> uniform_grid(int points = 21, double a = 0.0,
                                 double b = 1.0);

} // namespace lieint
