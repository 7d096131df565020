#include "lieint/representation.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace lieint {

Representation::Representation(AlgebraPtr algebra, std::string name, int dim_H,
                               std::vector<Mat> matrices, bool skew_flag)
    : algebra_(std::move(algebra)), name_(std::move(name)), dim_H_(dim_H),
      matrices_(std::move(matrices)), skew_flag_(skew_flag) {
  if (static_cast<int>(matrices_.size()) != algebra_->dim())
    throw std::invalid_argument(
        "Representation: one matrix per basis element required");
  for (const auto &m : matrices_)
    if (m.rows() != dim_H_ || m.cols() != dim_H_ || !m.allFinite())
      throw std::invalid_argument("Representation: bad matrix shape or values");
}

RepresentationValidation Representation::validate() const {
  RepresentationValidation out;
  const int d = algebra_->dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec bij = algebra_->bracket(algebra_->basis_vector(i),
                                  algebra_->basis_vector(j));
      Mat lhs = apply(bij);
      Mat rhs = matrices_[i] * matrices_[j] - matrices_[j] * matrices_[i];
      double r = (lhs - rhs).norm();
      if (r > out.homomorphism_residual) {
        out.homomorphism_residual = r;
        std::ostringstream os;
        os << "homomorphism residual " << r << " at pair ("
           << algebra_->basis_names()[i] << "," << algebra_->basis_names()[j]
           << ")";
        out.detail = os.str();
      }
    }
  if (skew_flag_)
    for (int i = 0; i < d; ++i)
      out.skew_residual = std::max(
          out.skew_residual, (matrices_[i].transpose() + matrices_[i]).norm());
  out.pass =
      out.homomorphism_residual <= 1e-10 && out.skew_residual <= 1e-12;
  if (out.pass)
    out.detail.clear();
  return out;
}

Mat Representation::apply(const Vec &x) const {
  if (x.size() != algebra_->dim())
    throw std::invalid_argument("apply: dimension mismatch");
  Mat m = Mat::Zero(dim_H_, dim_H_);
  for (int i = 0; i < algebra_->dim(); ++i)
    if (x[i] != 0.0)
      m += x[i] * matrices_[i];
  return m;
}

Mat Representation::exp_op(const Vec &x) const { return apply(x).exp(); }

double commutation_residual(const Representation &R, const Vec &x,
                            const Vec &y) {
  Mat lhs = R.exp_op(x) * R.apply(y) * R.exp_op(-x);
  Mat rhs = R.apply(R.algebra().exp_ad(x) * y);
  return (lhs - rhs).operatorNorm();
}

double constancy_residual(const Representation &R, const Vec &x, const Vec &y,
                          const std::vector<double> &grid, const Vec &v) {
  auto F = [&](double s) -> Vec {
    return R.exp_op((1.0 - s) * x) *
           (R.apply(R.algebra().exp_ad(s * x) * y) *
            (R.exp_op((s - 1.0) * x) * v));
  };
  Vec f0 = F(0.0);
  double worst = 0.0;
  for (double s : grid)
    worst = std::max(worst, (F(s) - f0).norm());
  return worst;
}

double duhamel_residual(const Representation &R, const Vec &x, const Vec &y,
                        double t, const Vec &v, const GaussLegendre &q) {
  const Mat A = R.apply(x);
  const Mat B = R.apply(y);
  Vec lhs = Mat((t * B).exp()) * v - Mat((t * A).exp()) * v;
  Vec integral = q.integrate(
      [&](double s) -> Vec {
        Mat eb = (s * B).exp();
        Mat ea = ((t - s) * A).exp();
        return Vec(eb * ((B - A) * (ea * v)));
      },
      0.0, t, Vec(Vec::Zero(R.dim_H())));
  return (lhs - integral).norm();
}

double fsss_pairing_residual(const Representation &R, const Vec &x,
                             const Vec &y, const Vec &v, const Vec &w) {
  if (!R.skew())
    throw std::invalid_argument(
        "fsss_pairing_residual: requires a skew-symmetric representation");
  double lhs = (-(R.exp_op(x) * (R.apply(y) * v))).dot(w);
  double rhs = (R.exp_op(x) * v).dot(R.apply(R.algebra().exp_ad(x) * y) * w);
  return std::abs(lhs - rhs);
}

double derpath_residual_plain(const Representation &R, const SmoothPath &p,
                              double t, const Vec &v, const GaussLegendre &q,
                              double h) {
  auto orbit = [&](double s) -> Vec { return R.exp_op(p(s)) * v; };
  Vec d_fd = (orbit(t + h) - orbit(t - h)) / (2.0 * h);
  Vec rhs = R.apply(log_derivative(R.algebra(), p, t, q)) * orbit(t);
  return (d_fd - rhs).norm();
}

double derpath_residual(const Representation &R, const SmoothPath &p, double t,
                        const Vec &v, const GaussLegendre &q, double fd_step) {
  auto orbit = [&](double s) -> Vec { return R.exp_op(p(s)) * v; };
  auto central = [&](double h) -> Vec {
    return (orbit(t + h) - orbit(t - h)) / (2.0 * h);
  };
  Vec d_fd = (4.0 * central(fd_step / 2) - central(fd_step)) / 3.0;
  Vec rhs = R.apply(log_derivative(R.algebra(), p, t, q)) * orbit(t);
  return (d_fd - rhs).norm();
}

} // namespace lieint
