#include "lieint/algebra.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace lieint {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names,
                       const std::vector<BracketTerm> &terms)
    : name_(std::move(name)), basis_names_(std::move(basis_names)) {
  dim_ = static_cast<int>(basis_names_.size());
  if (dim_ <= 0)
    throw std::invalid_argument("LieAlgebra: empty basis");

  // Fold raw entries to canonical i < j form. Explicit mirrors are checked
  // against the implied antisymmetric value instead of being trusted.
  std::map<std::tuple<int, int, int>, double> canonical;
  for (const auto &t : terms) {
    if (t.i < 0 || t.i >= dim_ || t.j < 0 || t.j >= dim_ || t.k < 0 ||
        t.k >= dim_)
      throw std::invalid_argument("LieAlgebra: bracket index out of range");
    if (t.i == t.j) {
      double v = std::abs(t.value);
      if (v > antisym_input_residual_) {
        antisym_input_residual_ = v;
        std::ostringstream os;
        os << "[e" << t.i << ",e" << t.i << "] must vanish, got " << t.value;
        antisym_detail_ = os.str();
      }
      continue;
    }
    int i = t.i, j = t.j;
    double v = t.value;
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    auto key = std::make_tuple(i, j, t.k);
    auto it = canonical.find(key);
    if (it == canonical.end()) {
      canonical[key] = v;
    } else if (std::abs(it->second - v) > 0.0) {
      // A duplicate or an inconsistent mirror entry.
      double r = std::abs(it->second - v);
      if (r > antisym_input_residual_) {
        antisym_input_residual_ = r;
        std::ostringstream os;
        os << "inconsistent entries for [e" << i << ",e" << j << "] coord "
           << std::get<2>(key);
        antisym_detail_ = os.str();
      }
    }
  }
  terms_.reserve(canonical.size());
  for (const auto &[key, v] : canonical)
    terms_.push_back(
        {std::get<0>(key), std::get<1>(key), std::get<2>(key), v});

  ad_basis_.assign(dim_, Mat::Zero(dim_, dim_));
  for (const auto &t : terms_) {
    // (ad e_i) e_j = [e_i, e_j] = sum_k c_{ij}^k e_k
    ad_basis_[t.i](t.k, t.j) += t.value;
    ad_basis_[t.j](t.k, t.i) -= t.value;
  }
}

Vec LieAlgebra::bracket(const Vec &x, const Vec &y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec r = Vec::Zero(dim_);
  for (const auto &t : terms_)
    r[t.k] += t.value * (x[t.i] * y[t.j] - x[t.j] * y[t.i]);
  return r;
}

Mat LieAlgebra::adjoint(const Vec &x) const {
  if (x.size() != dim_)
    throw std::invalid_argument("adjoint: dimension mismatch");
  Mat a = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0)
      a += x[i] * ad_basis_[i];
  return a;
}

Mat LieAlgebra::exp_ad(const Vec &x) const { return adjoint(x).exp(); }

Vec LieAlgebra::basis_vector(int i) const {
  Vec e = Vec::Zero(dim_);
  e[i] = 1.0;
  return e;
}

AlgebraValidation LieAlgebra::validate() const {
  AlgebraValidation out;
  out.antisymmetry_residual = antisym_input_residual_;
  out.detail = antisym_detail_;

  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vec ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        Vec jac = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                  bracket(ek, bracket(ei, ej));
        double r = jac.cwiseAbs().maxCoeff();
        if (r > worst) {
          worst = r;
          std::ostringstream os;
          os << "Jacobi violation at triple (" << basis_names_[i] << ","
             << basis_names_[j] << "," << basis_names_[k]
             << "), max coordinate " << r;
          out.detail = os.str();
        }
      }
  out.jacobi_residual = worst;
  out.pass = out.antisymmetry_residual <= 1e-12 && out.jacobi_residual <= 1e-12;
  if (out.pass)
    out.detail.clear();
  return out;
}

Decomposition::Decomposition(AlgebraPtr algebra, std::vector<Mat> blocks,
                             std::string name)
    : algebra_(std::move(algebra)), name_(std::move(name)),
      blocks_(std::move(blocks)) {
  const int d = algebra_->dim();
  int total = 0;
  for (const auto &b : blocks_) {
    if (b.rows() != d || b.cols() < 1)
      throw std::invalid_argument("Decomposition: bad block shape");
    total += static_cast<int>(b.cols());
  }
  if (total != d)
    throw std::invalid_argument(
        "Decomposition: block dimensions must sum to dim (direct sum)");

  concat_ = Mat(d, d);
  int col = 0;
  for (const auto &b : blocks_) {
    concat_.middleCols(col, b.cols()) = b;
    col += static_cast<int>(b.cols());
  }
  Eigen::JacobiSVD<Mat> svd(concat_);
  double smin = svd.singularValues().minCoeff();
  if (smin <= 0.0)
    throw std::invalid_argument("Decomposition: blocks do not span (singular)");
  condition_number_ = svd.singularValues().maxCoeff() / smin;

  lu_ = Eigen::PartialPivLU<Mat>(concat_);
  Mat inv = lu_.inverse();
  col = 0;
  for (const auto &b : blocks_) {
    projectors_.push_back(b * inv.middleRows(col, b.cols()));
    col += static_cast<int>(b.cols());
  }
}

std::vector<Vec> Decomposition::project(const Vec &x) const {
  if (x.size() != algebra_->dim())
    throw std::invalid_argument("project: dimension mismatch");
  std::vector<Vec> out;
  out.reserve(projectors_.size());
  for (const auto &p : projectors_)
    out.push_back(p * x);
  return out;
}

Vec Decomposition::block_coords(const Vec &x) const { return lu_.solve(x); }

Vec Decomposition::from_block_coords(const Vec &coords) const {
  return concat_ * coords;
}

Vec Decomposition::component(const Vec &coords, int j) const {
  int col = 0;
  for (int b = 0; b < j; ++b)
    col += block_dim(b);
  return blocks_[j] * coords.segment(col, block_dim(j));
}

Decomposition Decomposition::permuted(const std::vector<int> &order) const {
  std::vector<Mat> reordered;
  reordered.reserve(blocks_.size());
  for (int j : order)
    reordered.push_back(blocks_.at(j));
  return Decomposition(algebra_, std::move(reordered), name_ + "-permuted");
}

Decomposition trivial_decomposition(AlgebraPtr algebra) {
  std::vector<Mat> blocks{Mat::Identity(algebra->dim(), algebra->dim())};
  return Decomposition(std::move(algebra), std::move(blocks), "trivial");
}

} // namespace lieint
