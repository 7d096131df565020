#pragma once

#include <functional>

#include "lieint/factorization.hpp"
#include "lieint/quadrature.hpp"

namespace lieint {

/// A smooth algebra-valued path on [t0, t1]. When no analytic derivative is
/// supplied, Richardson-extrapolated central differences at fd_step are used.
struct SmoothPath {
  std::function<Vec(double)> value;
  std::function<Vec(double)> derivative; // may be empty
  double t0 = 0.0;
  double t1 = 1.0;
  double fd_step = 1e-5;

  Vec operator()(double t) const { return value(t); }
  Vec deriv(double t) const;
};

/// Straight path t -> t x.
SmoothPath ray_path(const Vec &x, double t0 = 0.0, double t1 = 1.0);

/// Right logarithmic derivative via the Maurer-Cartan integral
/// int_0^1 e^{s ad p(t)} p'(t) ds.
Vec log_derivative(const LieAlgebra &L, const SmoothPath &p, double t,
                   const GaussLegendre &q);

/// Right logarithmic derivative by its definition: the inverse of the
/// right-translation chart differential applied to p'(t).
Vec log_derivative_by_definition(const LieAlgebra &L, const SmoothPath &p,
                                 double t, const BchConfig &cfg = {});

/// || delta(a*b) - delta(a) - e^{ad a(t)} delta(b) || with the product path
/// built by pointwise bch and differentiated by finite differences.
double product_rule_residual(const LieAlgebra &L, const SmoothPath &a,
                             const SmoothPath &b, double t,
                             const GaussLegendre &q, const BchConfig &cfg = {});

/// Residual of the structural identity along the factorized path of
/// (tx)*y = x_1(t)*...*x_n(t):
///   x = sum_j e^{ad x_1} ... e^{ad x_{j-1}} int_0^1 e^{s ad x_j} x_j'(t) ds.
double structural_identity_residual(const LieAlgebra &L, const Decomposition &D,
                                    const Vec &x, const Vec &y, double t,
                                    const GaussLegendre &q,
                                    const BchConfig &bch_cfg = {},
                                    const NewtonConfig &newton_cfg = {},
                                    double derivative_step = 1e-5);

/// Same residual with a plain (non-extrapolated) central difference at step
/// h for the component derivatives, for O(h^2) refinement studies.
double structural_identity_residual_plain(
    const LieAlgebra &L, const Decomposition &D, const Vec &x, const Vec &y,
    double t, double h, const GaussLegendre &q, const BchConfig &bch_cfg = {},
    const NewtonConfig &newton_cfg = {});

} // namespace lieint
