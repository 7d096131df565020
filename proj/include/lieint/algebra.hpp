#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieint/types.hpp"

namespace lieint {

/// One sparse structure-constant entry: [e_i, e_j] has coordinate `value`
/// along e_k. Canonical storage uses i < j; the antisymmetric mirror is
/// implied.
struct BracketTerm {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;
};

struct AlgebraValidation {
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
  bool pass = false;
  std::string detail; // locates the worst violation, empty when clean
};

/// Finite-dimensional real Lie algebra given by structure constants over a
/// declared basis. The norm on coordinates is the Euclidean one throughout.
class LieAlgebra {
public:
  LieAlgebra(std::string name, std::vector<std::string> basis_names,
             const std::vector<BracketTerm> &terms);

  int dim() const { return dim_; }
  const std::string &name() const { return name_; }
  const std::vector<std::string> &basis_names() const { return basis_names_; }

  /// Canonical (i < j) sparse terms, antisymmetric completion implied.
  const std::vector<BracketTerm> &terms() const { return terms_; }

  Vec bracket(const Vec &x, const Vec &y) const;

  /// ad x as a dim x dim matrix: (ad x) y = [x, y].
  Mat adjoint(const Vec &x) const;

  /// e^{ad x}, an automorphism of the algebra.
  Mat exp_ad(const Vec &x) const;

  /// Antisymmetry and Jacobi residuals; pass iff both within 1e-12.
  AlgebraValidation validate() const;

  Vec basis_vector(int i) const;
  Vec zero() const { return Vec::Zero(dim_); }

private:
  std::string name_;
  int dim_;
  std::vector<std::string> basis_names_;
  std::vector<BracketTerm> terms_;
  std::vector<Mat> ad_basis_; // ad e_i, precomputed
  double antisym_input_residual_ = 0.0;
  std::string antisym_detail_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Direct-sum decomposition g = a_1 + ... + a_n given by basis blocks.
/// Projectors onto each block are computed once at construction.
class Decomposition {
public:
  Decomposition(AlgebraPtr algebra, std::vector<Mat> blocks,
                std::string name = "");

  const std::string &name() const { return name_; }
  const LieAlgebra &algebra() const { return *algebra_; }
  AlgebraPtr algebra_ptr() const { return algebra_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_dim(int j) const { return static_cast<int>(blocks_[j].cols()); }
  const Mat &block(int j) const { return blocks_[j]; }
  const Mat &projector(int j) const { return projectors_[j]; }
  double condition_number() const { return condition_number_; }

  /// Components of x per block; they sum to x.
  std::vector<Vec> project(const Vec &x) const;

  /// Coordinates of x in the concatenated block basis.
  Vec block_coords(const Vec &x) const;

  /// Inverse of block_coords: assemble an algebra vector from block
  /// coordinates (concatenated).
  Vec from_block_coords(const Vec &coords) const;

  /// Component j from concatenated block coordinates.
  Vec component(const Vec &coords, int j) const;

  /// Same blocks in a different order.
  Decomposition permuted(const std::vector<int> &order) const;

private:
  AlgebraPtr algebra_;
  std::string name_;
  std::vector<Mat> blocks_;
  std::vector<Mat> projectors_;
  Mat concat_;                 // [block_1 | ... | block_n]
  Eigen::PartialPivLU<Mat> lu_; // of concat_
  double condition_number_ = 0.0;
};

/// Trivial one-block decomposition (the identity chart).
Decomposition trivial_decomposition(AlgebraPtr algebra);

} // namespace lieint
