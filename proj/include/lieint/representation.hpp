#pragma once

#include "lieint/logderiv.hpp"

namespace lieint {

struct RepresentationValidation {
  double homomorphism_residual = 0.0;
  double skew_residual = 0.0;
  bool pass = false;
  std::string detail;
  /// Essential skew-adjointness and invariance of the domain under e^{a(x)}
  /// hold automatically in finite dimensions; recorded, not tested.
  std::string trivially_satisfied = "A1, A2 (finite dimension)";
};

/// Matrix representation of a Lie algebra: each basis element maps to a real
/// dim_H x dim_H matrix. skew_flag gates unitarity and pairing checks only;
/// the commutation identities hold for arbitrary representations.
class Representation {
public:
  Representation(AlgebraPtr algebra, std::string name, int dim_H,
                 std::vector<Mat> matrices, bool skew_flag);

  const LieAlgebra &algebra() const { return *algebra_; }
  AlgebraPtr algebra_ptr() const { return algebra_; }
  const std::string &name() const { return name_; }
  int dim_H() const { return dim_H_; }
  bool skew() const { return skew_flag_; }
  const std::vector<Mat> &matrices() const { return matrices_; }

  /// Homomorphism residual (<= 1e-10 per pair) plus skew residual when
  /// claimed (<= 1e-12).
  RepresentationValidation validate() const;

  /// a(x) = sum_i x_i a(e_i).
  Mat apply(const Vec &x) const;

  /// e^{a(x)}; orthogonal for skew representations.
  Mat exp_op(const Vec &x) const;

private:
  AlgebraPtr algebra_;
  std::string name_;
  int dim_H_;
  std::vector<Mat> matrices_;
  bool skew_flag_;
};

/// || e^{a(x)} a(y) e^{-a(x)} - a(e^{ad x} y) || in the operator 2-norm.
double commutation_residual(const Representation &R, const Vec &x,
                            const Vec &y);

/// Max deviation over the grid of
/// F(s) = e^{(1-s)a(x)} a(e^{s ad x} y) e^{(s-1)a(x)} v from F(0).
double constancy_residual(const Representation &R, const Vec &x, const Vec &y,
                          const std::vector<double> &grid, const Vec &v);

/// || e^{tB}v - e^{tA}v - int_0^t e^{sB}(B-A)e^{(t-s)A}v ds || with
/// A = a(x), B = a(y).
double duhamel_residual(const Representation &R, const Vec &x, const Vec &y,
                        double t, const Vec &v, const GaussLegendre &q);

/// |<-e^{a(x)} a(y) v, w> - <e^{a(x)} v, a(e^{ad x} y) w>|.
/// Requires a skew representation.
double fsss_pairing_residual(const Representation &R, const Vec &x,
                             const Vec &y, const Vec &v, const Vec &w);

/// Residual of d/dt e^{a(p(t))} v = a(delta(p)_t) e^{a(p(t))} v, the
/// derivative taken by Richardson finite differences.
double derpath_residual(const Representation &R, const SmoothPath &p, double t,
                        const Vec &v, const GaussLegendre &q,
                        double fd_step = 1e-4);

/// Plain central-difference variant at explicit step h, for refinement
/// studies.
double derpath_residual_plain(const Representation &R, const SmoothPath &p,
                              double t, const Vec &v, const GaussLegendre &q,
                              double h);

} // namespace lieint
