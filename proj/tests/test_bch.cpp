#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "lieint/catalog.hpp"
#include "lieint/suite.hpp"

using namespace lieint;

namespace {

// log(e^X e^Y) in the entry's faithful realization, pulled back to basis
// coordinates. Independent of the series path entirely.
Vec log_oracle(const CatalogEntry &entry, const Vec &x, const Vec &y) {
  const Representation &F = *entry.faithful;
  Mat G = (Mat(F.apply(x).exp()) * Mat(F.apply(y).exp())).log();
  const int n2 = F.dim_H() * F.dim_H();
  Mat basis(n2, entry.algebra->dim());
  for (int i = 0; i < entry.algebra->dim(); ++i)
    basis.col(i) = Eigen::Map<const Vec>(F.matrices()[i].data(), n2);
  return basis.colPivHouseholderQr().solve(
      Eigen::Map<const Vec>(G.data(), n2));
}

} // namespace

TEST_CASE("bch: abelian algebra reduces to addition") {
  auto entry = find_entry(load_catalog(), "abelian-4");
  std::mt19937_64 rng(1);
  for (int s = 0; s < 20; ++s) {
    Vec x = ball_sample(rng, 4, 1.0), y = ball_sample(rng, 4, 1.0);
    CHECK((bch(*entry.algebra, x, y) - x - y).norm() < 1e-15);
  }
}

TEST_CASE("bch: identities at zero and first orders") {
  auto entry = find_entry(load_catalog(), "so3");
  const LieAlgebra &L = *entry.algebra;
  Vec x(3);
  x << 0.2, -0.1, 0.15;
  CHECK((bch(L, x, L.zero()) - x).norm() < 1e-15);
  CHECK((bch(L, L.zero(), x) - x).norm() < 1e-15);

  // x*y = x + y + [x,y]/2 + O(3)
  Vec y(3);
  y << -0.05, 0.12, 0.07;
  double eps = 1e-3;
  Vec lhs = bch(L, Vec(eps * x), Vec(eps * y));
  Vec second = eps * (x + y) + 0.5 * eps * eps * L.bracket(x, y);
  CHECK((lhs - second).norm() < 5.0 * eps * eps * eps);
}

TEST_CASE("bch: Heisenberg closed form, exact at any order >= 2") {
  auto entry = find_entry(load_catalog(), "heisenberg3");
  const LieAlgebra &L = *entry.algebra;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int s = 0; s < 50; ++s) {
    double a = uni(rng), b = uni(rng);
    Vec p = a * L.basis_vector(0);
    Vec q = b * L.basis_vector(1);
    Vec expect = p + q + 0.5 * a * b * L.basis_vector(2);
    for (int order : {2, 4, 12}) {
      BchConfig cfg;
      cfg.max_order = order;
      CHECK((bch(L, p, q, cfg) - expect).norm() < 1e-14);
    }
  }
}

TEST_CASE("bch: so(3) pair against the matrix log oracle") {
  auto entry = find_entry(load_catalog(), "so3");
  const LieAlgebra &L = *entry.algebra;
  Vec x = 0.3 * L.basis_vector(0);
  Vec y = 0.2 * L.basis_vector(1);
  CHECK((bch(L, x, y) - log_oracle(entry, x, y)).norm() < 1e-10);
}

TEST_CASE("bch: oracle equivalence on random pairs, all faithful entries") {
  std::mt19937_64 rng(42);
  for (const auto &entry : load_catalog()) {
    REQUIRE(entry.faithful.has_value());
    const LieAlgebra &L = *entry.algebra;
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
      Vec x = ball_sample(rng, L.dim(), 0.3);
      Vec y = ball_sample(rng, L.dim(), 0.3);
      worst =
          std::max(worst, (bch(L, x, y) - log_oracle(entry, x, y)).norm());
    }
    CAPTURE(entry.name);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("bch: truncation monotonicity against the oracle") {
  auto entry = find_entry(load_catalog(), "so3");
  const LieAlgebra &L = *entry.algebra;
  std::mt19937_64 rng(5);
  for (int s = 0; s < 10; ++s) {
    Vec x = ball_sample(rng, 3, 0.3), y = ball_sample(rng, 3, 0.3);
    Vec exact = log_oracle(entry, x, y);
    double prev = std::numeric_limits<double>::infinity();
    for (int order : {4, 8, 12}) {
      BchConfig cfg;
      cfg.max_order = order;
      double r = (bch(L, x, y, cfg) - exact).norm();
      CHECK(r <= prev + 1e-15);
      prev = r;
    }
  }
}

TEST_CASE("bch: antihomomorphism symmetry") {
  std::mt19937_64 rng(6);
  for (const auto &entry : load_catalog()) {
    const LieAlgebra &L = *entry.algebra;
    for (int s = 0; s < 20; ++s) {
      Vec x = ball_sample(rng, L.dim(), 0.3);
      Vec y = ball_sample(rng, L.dim(), 0.3);
      CHECK((bch(L, x, y) + bch(L, Vec(-y), Vec(-x))).norm() < 1e-10);
    }
  }
}

TEST_CASE("bch: worst-case cancellation x * (-x) = 0") {
  auto entry = find_entry(load_catalog(), "sl2");
  std::mt19937_64 rng(8);
  for (int s = 0; s < 30; ++s) {
    Vec x = ball_sample(rng, 3, 0.5);
    CHECK(bch(*entry.algebra, x, Vec(-x)).norm() < 1e-12);
  }
}

TEST_CASE("bch: domain warning and non-finite rejection") {
  auto entry = find_entry(load_catalog(), "so3");
  const LieAlgebra &L = *entry.algebra;
  Vec big = Vec::Constant(3, 1.0);
  BchResult r = bch_full(L, big, big);
  CHECK(r.domain_warning);
  CHECK_FALSE(bch_full(L, Vec(0.1 * big), Vec(0.1 * big)).domain_warning);

  Vec nan = Vec::Constant(3, std::numeric_limits<double>::quiet_NaN());
  CHECK_THROWS_AS(bch(L, nan, big), std::invalid_argument);
}

TEST_CASE("bch_multi: degenerate lists and triple oracle") {
  auto entry = find_entry(load_catalog(), "so3");
  const LieAlgebra &L = *entry.algebra;
  Vec x(3);
  x << 0.1, 0.25, -0.2;
  CHECK((bch_multi(L, {x}) - x).norm() < 1e-15);
  CHECK((bch_multi(L, {x, L.zero(), L.zero()}) - x).norm() < 1e-15);
  CHECK(bch_multi(L, {}).norm() == doctest::Approx(0.0));

  const Representation &F = *entry.faithful;
  std::vector<Vec> xs{0.2 * L.basis_vector(0), 0.2 * L.basis_vector(1),
                      0.2 * L.basis_vector(2)};
  Mat prod = Mat::Identity(3, 3);
  for (const auto &v : xs)
    prod = prod * Mat(F.apply(v).exp());
  Mat G = prod.log();
  Mat basis(9, 3);
  for (int i = 0; i < 3; ++i)
    basis.col(i) = Eigen::Map<const Vec>(F.matrices()[i].data(), 9);
  Vec expect =
      basis.colPivHouseholderQr().solve(Eigen::Map<const Vec>(G.data(), 9));
  CHECK((bch_multi(L, xs) - expect).norm() < 1e-9);
}

TEST_CASE("right chart differential: identity at 0 and fixed-point column") {
  auto entry = find_entry(load_catalog(), "so3");
  const LieAlgebra &L = *entry.algebra;
  CHECK((bch_differential_at_zero_right(L, L.zero()) - Mat::Identity(3, 3))
            .norm() < 1e-10);

  // D rho_x(0) x = x: the ray t -> tx has logarithmic derivative x.
  Vec x = 0.4 * L.basis_vector(2);
  CHECK((bch_differential_at_zero_right(L, x) * x - x).norm() < 1e-10);

  // Finite-difference oracle at a coarser step pair, quadratic decay.
  Vec x2(3);
  x2 << 0.15, -0.3, 0.2;
  Mat D = bch_differential_at_zero_right(L, x2);
  Vec y(3);
  y << 0.3, 0.1, -0.2;
  auto fd = [&](double h) {
    return ((bch(L, Vec(h * y), x2) - bch(L, Vec(-h * y), x2)) / (2 * h) -
            D * y)
        .norm();
  };
  CHECK(fd(1e-2) < 1e-4);
  CHECK(fd(5e-3) < fd(1e-2) / 3.0);
}
