#include "lieint/catalog.hpp"

#include <cmath>

namespace lieint {

namespace {

Mat columns(int dim, const std::vector<Vec> &cols) {
  Mat m(dim, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c)
    m.col(c) = cols[c];
  return m;
}

Vec unit(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v[i] = 1.0;
  return v;
}

Mat elem(int n, int r, int c) {
  Mat m = Mat::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}

/// a + bi -> [[a, -b], [b, a]] blocks.
Mat realify(const Eigen::MatrixXcd &m) {
  Mat out(2 * m.rows(), 2 * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      double a = m(r, c).real(), b = m(r, c).imag();
      out(2 * r, 2 * c) = a;
      out(2 * r, 2 * c + 1) = -b;
      out(2 * r + 1, 2 * c) = b;
      out(2 * r + 1, 2 * c + 1) = a;
    }
  return out;
}

std::vector<Mat> so3_defining() {
  Mat L1 = Mat::Zero(3, 3), L2 = Mat::Zero(3, 3), L3 = Mat::Zero(3, 3);
  L1(1, 2) = -1;
  L1(2, 1) = 1;
  L2(0, 2) = 1;
  L2(2, 0) = -1;
  L3(0, 1) = -1;
  L3(1, 0) = 1;
  return {L1, L2, L3};
}

// Spin-2 as the action ad_L on traceless symmetric 3x3 matrices, expressed
// in an orthonormal basis under the Frobenius inner product.
std::vector<Mat> so3_spin2() {
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  std::vector<Mat> basis;
  basis.push_back((elem(3, 0, 0) - elem(3, 1, 1)) / s2);
  basis.push_back((2 * elem(3, 2, 2) - elem(3, 0, 0) - elem(3, 1, 1)) / s6);
  basis.push_back((elem(3, 0, 1) + elem(3, 1, 0)) / s2);
  basis.push_back((elem(3, 0, 2) + elem(3, 2, 0)) / s2);
  basis.push_back((elem(3, 1, 2) + elem(3, 2, 1)) / s2);
  std::vector<Mat> gens = so3_defining();
  std::vector<Mat> out;
  for (const Mat &L : gens) {
    Mat rep = Mat(5, 5);
    for (int j = 0; j < 5; ++j) {
      Mat image = L * basis[j] - basis[j] * L;
      for (int i = 0; i < 5; ++i)
        rep(i, j) = (basis[i].transpose() * image).trace();
    }
    out.push_back(rep);
  }
  return out;
}

std::vector<BracketTerm> so3_terms() {
  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
  return {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}};
}

CatalogEntry make_so3() {
  auto L = std::make_shared<LieAlgebra>(
      "so3", std::vector<std::string>{"e1", "e2", "e3"}, so3_terms());
  CatalogEntry e;
  e.name = "so3";
  e.algebra = L;
  e.decompositions.push_back(Decomposition(
      L, {columns(3, {unit(3, 0)}), columns(3, {unit(3, 1)}),
          columns(3, {unit(3, 2)})},
      "axes"));
  e.decompositions.push_back(trivial_decomposition(L));
  e.representations.emplace_back(L, "defining", 3, so3_defining(), true);
  e.representations.emplace_back(L, "spin2", 5, so3_spin2(), true);
  e.faithful = e.representations.front();
  e.notes = "rotation algebra; defining and real spin-2 representations";
  return e;
}

CatalogEntry make_su2_realified() {
  auto L = std::make_shared<LieAlgebra>(
      "su2-realified", std::vector<std::string>{"x1", "x2", "x3"},
      so3_terms());
  using namespace std::complex_literals;
  Eigen::MatrixXcd s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -1i, 1i, 0;
  s3 << 1, 0, 0, -1;
  std::vector<Mat> mats{realify(-0.5i * s1), realify(-0.5i * s2),
                        realify(-0.5i * s3)};
  CatalogEntry e;
  e.name = "su2-realified";
  e.algebra = L;
  e.decompositions.push_back(trivial_decomposition(L));
  e.representations.emplace_back(L, "realified", 4, mats, true);
  e.faithful = e.representations.front();
  e.notes = "su(2) spinor representation realified to 4x4 skew matrices";
  return e;
}

CatalogEntry make_heisenberg3() {
  auto L = std::make_shared<LieAlgebra>(
      "heisenberg3", std::vector<std::string>{"p", "q", "z"},
      std::vector<BracketTerm>{{0, 1, 2, 1.0}});
  CatalogEntry e;
  e.name = "heisenberg3";
  e.algebra = L;
  e.decompositions.push_back(Decomposition(
      L, {columns(3, {unit(3, 0)}), columns(3, {unit(3, 1), unit(3, 2)})},
      "p|qz"));
  e.decompositions.push_back(trivial_decomposition(L));
  // Strictly upper triangular realization; faithful, not skew.
  std::vector<Mat> ut{elem(3, 0, 1), elem(3, 1, 2), elem(3, 0, 2)};
  e.representations.emplace_back(L, "upper-triangular", 3, ut, false);
  // Quotient by the center: p and q go to commuting rotations, z to 0.
  Mat J = Mat::Zero(2, 2);
  J(0, 1) = -1;
  J(1, 0) = 1;
  e.representations.emplace_back(
      L, "skew-quotient", 2, std::vector<Mat>{J, J, Mat::Zero(2, 2)}, true);
  e.faithful = e.representations.front();
  e.notes = "2-step nilpotent; the Dynkin series terminates at order 2";
  return e;
}

CatalogEntry make_sl2() {
  auto L = std::make_shared<LieAlgebra>(
      "sl2", std::vector<std::string>{"e", "f", "h"},
      std::vector<BracketTerm>{
          {0, 1, 2, 1.0}, {0, 2, 0, -2.0}, {1, 2, 1, 2.0}});
  CatalogEntry e;
  e.name = "sl2";
  e.algebra = L;
  Vec k(3), a(3), n(3);
  k << 1, -1, 0; // e - f spans so(2)
  a << 0, 0, 1;  // h
  n << 1, 0, 0;  // e
  e.decompositions.push_back(Decomposition(
      L, {columns(3, {k}), columns(3, {a}), columns(3, {n})}, "iwasawa"));
  e.decompositions.push_back(trivial_decomposition(L));
  std::vector<Mat> def{elem(2, 0, 1), elem(2, 1, 0),
                       elem(2, 0, 0) - elem(2, 1, 1)};
  e.representations.emplace_back(L, "defining", 2, def, false);
  e.faithful = e.representations.front();
  e.notes = "split simple; Iwasawa chart K+A+N; no skew faithful "
            "finite-dimensional representation exists";
  return e;
}

CatalogEntry make_upper_triangular3() {
  // Basis d1,d2,d3 (diagonal), n12,n13,n23 (strict upper).
  std::vector<BracketTerm> terms{
      {0, 3, 3, 1.0},  {1, 3, 3, -1.0}, {0, 4, 4, 1.0},
      {2, 4, 4, -1.0}, {1, 5, 5, 1.0},  {2, 5, 5, -1.0},
      {3, 5, 4, 1.0}};
  auto L = std::make_shared<LieAlgebra>(
      "upper-triangular-3",
      std::vector<std::string>{"d1", "d2", "d3", "n12", "n13", "n23"}, terms);
  CatalogEntry e;
  e.name = "upper-triangular-3";
  e.algebra = L;
  e.decompositions.push_back(Decomposition(
      L,
      {columns(6, {unit(6, 0), unit(6, 1), unit(6, 2)}),
       columns(6, {unit(6, 3), unit(6, 4), unit(6, 5)})},
      "diag|strict"));
  e.decompositions.push_back(trivial_decomposition(L));
  std::vector<Mat> def{elem(3, 0, 0), elem(3, 1, 1), elem(3, 2, 2),
                       elem(3, 0, 1), elem(3, 0, 2), elem(3, 1, 2)};
  e.representations.emplace_back(L, "defining", 3, def, false);
  e.faithful = e.representations.front();
  e.notes = "solvable; diagonal and strictly-upper-triangular blocks";
  return e;
}

CatalogEntry make_abelian4() {
  auto L = std::make_shared<LieAlgebra>(
      "abelian-4", std::vector<std::string>{"e1", "e2", "e3", "e4"},
      std::vector<BracketTerm>{});
  CatalogEntry e;
  e.name = "abelian-4";
  e.algebra = L;
  e.decompositions.push_back(Decomposition(
      L,
      {columns(4, {unit(4, 0), unit(4, 1)}),
       columns(4, {unit(4, 2), unit(4, 3)})},
      "split22"));
  e.decompositions.push_back(trivial_decomposition(L));
  std::vector<Mat> diag{elem(4, 0, 0), elem(4, 1, 1), elem(4, 2, 2),
                        elem(4, 3, 3)};
  e.representations.emplace_back(L, "diag", 4, diag, false);
  Mat J = Mat::Zero(2, 2);
  J(0, 1) = -1;
  J(1, 0) = 1;
  std::vector<Mat> planar{1.0 * J, 0.5 * J, -0.3 * J, 0.7 * J};
  e.representations.emplace_back(L, "planar-skew", 2, planar, true);
  e.faithful = e.representations.front();
  e.notes = "degenerate control: every bch reduces to addition";
  return e;
}

void validate_entry(const CatalogEntry &e) {
  AlgebraValidation av = e.algebra->validate();
  if (!av.pass)
    throw std::runtime_error("catalog entry '" + e.name +
                             "': algebra validation failed: " + av.detail);
  for (const auto &r : e.representations) {
    RepresentationValidation rv = r.validate();
    if (!rv.pass)
      throw std::runtime_error("catalog entry '" + e.name +
                               "': representation '" + r.name() +
                               "' failed validation: " + rv.detail);
  }
  for (const auto &d : e.decompositions) {
    // Projector identities, re-checked rather than trusted.
    Mat sum = Mat::Zero(e.algebra->dim(), e.algebra->dim());
    for (int j = 0; j < d.num_blocks(); ++j) {
      sum += d.projector(j);
      for (int k = 0; k < d.num_blocks(); ++k)
        if (j != k &&
            (d.projector(j) * d.projector(k)).norm() > 1e-10)
          throw std::runtime_error("catalog entry '" + e.name +
                                   "': projectors not orthogonal in '" +
                                   d.name() + "'");
    }
    if ((sum - Mat::Identity(e.algebra->dim(), e.algebra->dim())).norm() >
        1e-10)
      throw std::runtime_error("catalog entry '" + e.name +
                               "': projectors do not sum to identity in '" +
                               d.name() + "'");
  }
}

} // namespace

const Decomposition &
CatalogEntry::decomposition(const std::string &dname) const {
  for (const auto &d : decompositions)
    if (d.name() == dname)
      return d;
  throw std::invalid_argument("no decomposition '" + dname + "' in entry '" +
                              name + "'");
}

const Representation &
CatalogEntry::representation(const std::string &rname) const {
  for (const auto &r : representations)
    if (r.name() == rname)
      return r;
  throw std::invalid_argument("no representation '" + rname + "' in entry '" +
                              name + "'");
}

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> catalog;
  catalog.push_back(make_so3());
  catalog.push_back(make_su2_realified());
  catalog.push_back(make_heisenberg3());
  catalog.push_back(make_sl2());
  catalog.push_back(make_upper_triangular3());
  catalog.push_back(make_abelian4());
  for (const auto &e : catalog)
    validate_entry(e);
  return catalog;
}

const CatalogEntry &find_entry(const std::vector<CatalogEntry> &catalog,
                               const std::string &name) {
  for (const auto &e : catalog)
    if (e.name == name)
      return e;
  throw std::invalid_argument("no catalog entry named '" + name + "'");
}

CatalogEntry make_broken_so3() {
  CatalogEntry e = make_so3();
  std::vector<Mat> mats = so3_defining();
  mats[0](0, 1) += 1e-3;
  e.name = "so3-broken";
  e.representations.clear();
  e.representations.emplace_back(e.algebra, "defining-broken", 3, mats, false);
  e.notes = "negative control: one generator entry perturbed by 1e-3";
  return e;
}

} // namespace lieint
