#include "lieint/logderiv.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace lieint {

Vec SmoothPath::deriv(double t) const {
  if (derivative)
    return derivative(t);
  auto central = [&](double h) -> Vec {
    double lo = t - h, hi = t + h;
    if (lo >= t0 && hi <= t1)
      return (value(hi) - value(lo)) / (2.0 * h);
    double sign = (lo < t0) ? 1.0 : -1.0;
    return sign *
           (-3.0 * value(t) + 4.0 * value(t + sign * h) -
            value(t + 2.0 * sign * h)) /
           (2.0 * h);
  };
  Vec dh = central(fd_step);
  Vec dh2 = central(fd_step / 2);
  return (4.0 * dh2 - dh) / 3.0;
}

SmoothPath ray_path(const Vec &x, double t0, double t1) {
  return {[x](double t) { return Vec(t * x); },
          [x](double) { return x; }, t0, t1, 1e-5};
}

Vec log_derivative(const LieAlgebra &L, const SmoothPath &p, double t,
                   const GaussLegendre &q) {
  const Mat ad_p = L.adjoint(p(t));
  const Vec dp = p.deriv(t);
  return q.integrate(
      [&](double s) -> Vec { return (s * ad_p).exp() * dp; }, 0.0, 1.0,
      Vec(L.zero()));
}

Vec log_derivative_by_definition(const LieAlgebra &L, const SmoothPath &p,
                                 double t, const BchConfig &cfg) {
  Mat diff = bch_differential_at_zero_right(L, p(t), cfg);
  Eigen::FullPivLU<Mat> lu(diff);
  if (!lu.isInvertible()) {
    Eigen::JacobiSVD<Mat> svd(diff);
    double cond = svd.singularValues().maxCoeff() /
                  std::max(svd.singularValues().minCoeff(), 1e-300);
    throw std::runtime_error(
        "log_derivative_by_definition: singular chart differential, "
        "condition number " +
        std::to_string(cond));
  }
  return lu.solve(p.deriv(t));
}

double product_rule_residual(const LieAlgebra &L, const SmoothPath &a,
                             const SmoothPath &b, double t,
                             const GaussLegendre &q, const BchConfig &cfg) {
  // The product path is materialized pointwise; its derivative is always a
  // finite difference so the test stays independent of the identity.
  SmoothPath ab{[&L, &a, &b, &cfg](double s) {
                  return bch(L, a(s), b(s), cfg);
                },
                nullptr, a.t0, a.t1, a.fd_step};
  Vec lhs = log_derivative(L, ab, t, q);
  Vec rhs = log_derivative(L, a, t, q) +
            L.exp_ad(a(t)) * log_derivative(L, b, t, q);
  return (lhs - rhs).norm();
}

namespace {

double structural_residual_impl(const LieAlgebra &L, const FactorizedPath &path,
                                const Vec &x, double t, const GaussLegendre &q,
                                const std::function<Vec(int)> &component_deriv) {
  ChartPoint p = path.at(t);
  Vec sum = L.zero();
  Mat prefix = Mat::Identity(L.dim(), L.dim());
  for (int j = 0; j < path.num_blocks(); ++j) {
    const Vec &xj = p.components[j];
    const Vec dxj = component_deriv(j);
    const Mat ad_xj = L.adjoint(xj);
    Vec integral = q.integrate(
        [&](double s) -> Vec { return (s * ad_xj).exp() * dxj; }, 0.0, 1.0,
        Vec(L.zero()));
    sum += prefix * integral;
    prefix = prefix * ad_xj.exp();
  }
  return (x - sum).norm();
}

} // namespace

double structural_identity_residual(const LieAlgebra &L, const Decomposition &D,
                                    const Vec &x, const Vec &y, double t,
                                    const GaussLegendre &q,
                                    const BchConfig &bch_cfg,
                                    const NewtonConfig &newton_cfg,
                                    double derivative_step) {
  FactorizedPath path(D.algebra_ptr(), D, x, y, bch_cfg, newton_cfg,
                      derivative_step);
  return structural_residual_impl(
      L, path, x, t, q,
      [&](int j) { return path.component_derivative(t, j); });
}

double structural_identity_residual_plain(
    const LieAlgebra &L, const Decomposition &D, const Vec &x, const Vec &y,
    double t, double h, const GaussLegendre &q, const BchConfig &bch_cfg,
    const NewtonConfig &newton_cfg) {
  FactorizedPath path(D.algebra_ptr(), D, x, y, bch_cfg, newton_cfg, h);
  return structural_residual_impl(
      L, path, x, t, q,
      [&](int j) { return path.component_derivative_plain(t, j, h); });
}

} // namespace lieint
