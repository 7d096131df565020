#include "lieint/integrator.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace lieint {

LocalRepresentation::LocalRepresentation(Representation rep, Decomposition dec,
                                         BchConfig bch_cfg,
                                         NewtonConfig newton_cfg)
    : rep_(std::move(rep)), dec_(std::move(dec)), bch_cfg_(bch_cfg),
      newton_cfg_(newton_cfg) {
  if (dec_.algebra().dim() != rep_.algebra().dim())
    throw std::invalid_argument(
        "LocalRepresentation: representation and decomposition disagree");
  RepresentationValidation rv = rep_.validate();
  if (!rv.pass)
    throw std::invalid_argument("LocalRepresentation: representation failed "
                                "validation: " +
                                rv.detail);
}

LocalRepresentation::LocalRepresentation(Representation rep, Decomposition dec,
                                         BchConfig bch_cfg,
                                         NewtonConfig newton_cfg, Unchecked)
    : rep_(std::move(rep)), dec_(std::move(dec)), bch_cfg_(bch_cfg),
      newton_cfg_(newton_cfg) {}

LocalRepresentation LocalRepresentation::unchecked(Representation rep,
                                                   Decomposition dec,
                                                   BchConfig bch_cfg,
                                                   NewtonConfig newton_cfg) {
  return LocalRepresentation(std::move(rep), std::move(dec), bch_cfg,
                             newton_cfg, Unchecked{});
}

Mat LocalRepresentation::pi(const Vec &z) const {
  ChartPoint p = factorize(rep_.algebra(), dec_, z, bch_cfg_, newton_cfg_);
  Mat out = Mat::Identity(rep_.dim_H(), rep_.dim_H());
  for (const Vec &component : p.components)
    out = out * rep_.exp_op(component);
  chart_radius_ = std::max(chart_radius_, z.norm());
  return out;
}

double multiplicativity_residual(const LocalRepresentation &LR, const Vec &x,
                                 const Vec &y) {
  const LieAlgebra &L = LR.rep().algebra();
  Mat lhs = LR.pi(bch(L, x, y, LR.bch_config()));
  Mat rhs = LR.pi(x) * LR.pi(y);
  return (lhs - rhs).operatorNorm();
}

double ode_residual_plain(const LocalRepresentation &LR, const Vec &x,
                          const Vec &y, const Vec &v,
                          const std::vector<double> &grid, double h) {
  const LieAlgebra &L = LR.rep().algebra();
  auto gamma = [&](double t) -> Vec {
    return LR.pi(bch(L, t * x, y, LR.bch_config())) * v;
  };
  const Mat ax = LR.rep().apply(x);
  double worst = 0.0;
  for (double t : grid) {
    Vec d = (gamma(t + h) - gamma(t - h)) / (2.0 * h);
    worst = std::max(worst, (d - ax * gamma(t)).norm());
  }
  return worst;
}

double ode_residual(const LocalRepresentation &LR, const Vec &x, const Vec &y,
                    const Vec &v, const std::vector<double> &grid,
                    double fd_step) {
  const LieAlgebra &L = LR.rep().algebra();
  auto gamma = [&](double t) -> Vec {
    return LR.pi(bch(L, t * x, y, LR.bch_config())) * v;
  };
  const Mat ax = LR.rep().apply(x);
  double worst = 0.0;
  for (double t : grid) {
    auto central = [&](double h) -> Vec {
      return (gamma(t + h) - gamma(t - h)) / (2.0 * h);
    };
    Vec d = (4.0 * central(fd_step / 2) - central(fd_step)) / 3.0;
    worst = std::max(worst, (d - ax * gamma(t)).norm());
  }
  return worst;
}

double uniqueness_check(const LocalRepresentation &LR, const Vec &x,
                        const Vec &y, const Vec &v,
                        const std::vector<double> &grid) {
  const LieAlgebra &L = LR.rep().algebra();
  const Mat ax = LR.rep().apply(x);
  const Vec piy_v = LR.pi(y) * v;
  double worst = 0.0;
  for (double t : grid) {
    Vec lhs = LR.pi(bch(L, t * x, y, LR.bch_config())) * v;
    Vec rhs = (t * ax).exp() * piy_v;
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

double derived_rep_residual(const LocalRepresentation &LR, const Vec &x,
                            const Vec &v, double fd_step) {
  auto orbit = [&](double t) -> Vec { return LR.pi(t * x) * v; };
  auto central = [&](double h) -> Vec {
    return (orbit(h) - orbit(-h)) / (2.0 * h);
  };
  Vec d = (4.0 * central(fd_step / 2) - central(fd_step)) / 3.0;
  return (d - LR.rep().apply(x) * v).norm();
}

std::vector<double> uniform_grid(int points, double a, double b) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = a + (b - a) * i / (points - 1);
  return g;
}

} // namespace lieint
