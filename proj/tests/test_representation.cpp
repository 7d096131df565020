#include <doctest.h>

#include <random>

#include "lieint/catalog.hpp"
#include "lieint/suite.hpp"

using namespace lieint;

TEST_CASE("representation: catalog entries validate") {
  for (const auto &entry : load_catalog())
    for (const auto &R : entry.representations) {
      auto v = R.validate();
      CAPTURE(entry.name);
      CAPTURE(R.name());
      CHECK(v.pass);
      CHECK(v.homomorphism_residual < 1e-10);
      if (R.skew())
        CHECK(v.skew_residual < 1e-12);
    }
}

TEST_CASE("representation: so3 defining rotation by pi about the third axis") {
  auto entry = find_entry(load_catalog(), "so3");
  const Representation &R = entry.representation("defining");
  Vec x = M_PI * entry.algebra->basis_vector(2);
  Mat U = R.exp_op(x);
  Mat expect(3, 3);
  expect << -1, 0, 0, 0, -1, 0, 0, 0, 1;
  CHECK((U - expect).norm() < 1e-12);
}

TEST_CASE("representation: skew exponentials are orthogonal") {
  std::mt19937_64 rng(41);
  for (const auto &entry : load_catalog())
    for (const auto &R : entry.representations) {
      if (!R.skew())
        continue;
      for (int s = 0; s < 5; ++s) {
        Vec x = ball_sample(rng, entry.algebra->dim(), 1.0);
        Mat U = R.exp_op(x);
        CHECK((U.transpose() * U - Mat::Identity(R.dim_H(), R.dim_H()))
                  .norm() < 1e-12);
      }
    }
}

TEST_CASE("commutation: holds on every catalog representation") {
  std::mt19937_64 rng(43);
  for (const auto &entry : load_catalog())
    for (const auto &R : entry.representations) {
      double worst = 0.0;
      for (int s = 0; s < 20; ++s) {
        Vec x = ball_sample(rng, entry.algebra->dim(), 2.0);
        Vec y = ball_sample(rng, entry.algebra->dim(), 2.0);
        worst = std::max(worst, commutation_residual(R, x, y));
      }
      CAPTURE(entry.name);
      CAPTURE(R.name());
      CHECK(worst < 1e-9);
    }
}

TEST_CASE("commutation: heisenberg upper-triangular closed form") {
  // e^{a p} q e^{-a p} = q + a z in the upper-triangular realization.
  auto entry = find_entry(load_catalog(), "heisenberg3");
  const Representation &R = entry.representation("upper-triangular");
  const LieAlgebra &L = *entry.algebra;
  double a = 0.7;
  Vec x = a * L.basis_vector(0);
  Vec y = L.basis_vector(1);
  Mat lhs = R.exp_op(x) * R.apply(y) * R.exp_op(Vec(-x));
  Mat rhs = R.apply(y) + a * R.apply(L.basis_vector(2));
  CHECK((lhs - rhs).norm() < 1e-13);
}

TEST_CASE("constancy: the interpolating family is constant in s") {
  std::mt19937_64 rng(47);
  auto grid = uniform_grid(11);
  for (const char *name : {"so3", "sl2", "heisenberg3"}) {
    auto entry = find_entry(load_catalog(), name);
    double worst = 0.0;
    for (const auto &R : entry.representations)
      for (int s = 0; s < 10; ++s) {
        Vec x = ball_sample(rng, entry.algebra->dim(), 1.0);
        Vec y = ball_sample(rng, entry.algebra->dim(), 1.0);
        Vec v = unit_sample(rng, R.dim_H());
        worst = std::max(worst, constancy_residual(R, x, y, grid, v));
      }
    CAPTURE(name);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("duhamel: trivial cases vanish") {
  GaussLegendre quad(16);
  auto entry = find_entry(load_catalog(), "so3");
  const Representation &R = entry.representation("defining");
  std::mt19937_64 rng(53);
  Vec x = ball_sample(rng, 3, 1.0);
  Vec y = ball_sample(rng, 3, 1.0);
  Vec v = unit_sample(rng, 3);
  CHECK(duhamel_residual(R, x, x, 0.8, v, quad) < 1e-13);
  CHECK(duhamel_residual(R, x, y, 0.0, v, quad) < 1e-13);
}

TEST_CASE("duhamel: random operator pairs") {
  GaussLegendre quad(16);
  std::mt19937_64 rng(59);
  for (const auto &entry : load_catalog())
    for (const auto &R : entry.representations) {
      double worst = 0.0;
      for (int s = 0; s < 10; ++s) {
        Vec x = ball_sample(rng, entry.algebra->dim(), 1.0);
        Vec y = ball_sample(rng, entry.algebra->dim(), 1.0);
        Vec v = unit_sample(rng, R.dim_H());
        double t = std::uniform_real_distribution<>()(rng);
        worst = std::max(worst, duhamel_residual(R, x, y, t, v, quad));
      }
      CAPTURE(entry.name);
      CAPTURE(R.name());
      CHECK(worst < 1e-9);
    }
}

TEST_CASE("fsss pairing: skew representations") {
  std::mt19937_64 rng(61);
  for (const auto &entry : load_catalog())
    for (const auto &R : entry.representations) {
      if (!R.skew())
        continue;
      double worst = 0.0;
      for (int s = 0; s < 10; ++s) {
        Vec x = ball_sample(rng, entry.algebra->dim(), 1.0);
        Vec y = ball_sample(rng, entry.algebra->dim(), 1.0);
        Vec v = unit_sample(rng, R.dim_H());
        Vec w = unit_sample(rng, R.dim_H());
        worst = std::max(worst, fsss_pairing_residual(R, x, y, v, w));
      }
      CAPTURE(entry.name);
      CAPTURE(R.name());
      CHECK(worst < 1e-10);
    }
}

TEST_CASE("fsss pairing: x = 0 degenerates to skewness of a(y)") {
  auto entry = find_entry(load_catalog(), "so3");
  const Representation &R = entry.representation("defining");
  std::mt19937_64 rng(67);
  Vec y = ball_sample(rng, 3, 1.0);
  Vec v = unit_sample(rng, 3), w = unit_sample(rng, 3);
  CHECK(fsss_pairing_residual(R, Vec(Vec::Zero(3)), y, v, w) < 1e-13);
  CHECK(fsss_pairing_residual(R, y, Vec(Vec::Zero(3)), v, w) < 1e-13);
}

TEST_CASE("fsss pairing: rejects non-skew representations") {
  auto entry = find_entry(load_catalog(), "heisenberg3");
  const Representation &R = entry.representation("upper-triangular");
  Vec z = Vec::Zero(3), v = Vec::Ones(3);
  CHECK_THROWS_AS(fsss_pairing_residual(R, z, z, v, v),
                  std::invalid_argument);
}

TEST_CASE("derpath: straight paths across representations") {
  GaussLegendre quad(16);
  std::mt19937_64 rng(71);
  for (const auto &entry : load_catalog())
    for (const auto &R : entry.representations) {
      double worst = 0.0;
      for (int s = 0; s < 5; ++s) {
        SmoothPath p = ray_path(ball_sample(rng, entry.algebra->dim(), 0.5));
        Vec v = unit_sample(rng, R.dim_H());
        double t = 0.2 + 0.6 * std::uniform_real_distribution<>()(rng);
        worst = std::max(worst, derpath_residual(R, p, t, v, quad));
      }
      CAPTURE(entry.name);
      CAPTURE(R.name());
      CHECK(worst < 1e-7);
    }
}

TEST_CASE("derpath: plain-difference residual decays as O(h^2)") {
  GaussLegendre quad(16);
  auto entry = find_entry(load_catalog(), "sl2");
  const Representation &R = entry.representation("defining");
  Vec x(3);
  x << 0.4, -0.2, 0.3;
  SmoothPath p = ray_path(x);
  Vec v(2);
  v << 0.6, -0.8;
  double r1 = derpath_residual_plain(R, p, 0.5, v, quad, 1e-2);
  double r2 = derpath_residual_plain(R, p, 0.5, v, quad, 5e-3);
  double r3 = derpath_residual_plain(R, p, 0.5, v, quad, 2.5e-3);
  CHECK(r1 / r2 > 2.5);
  CHECK(r2 / r3 > 2.5);
}

TEST_CASE("broken fixture: validation and residuals detect the defect") {
  CatalogEntry broken = make_broken_so3();
  const Representation &R = broken.representations.front();
  CHECK_FALSE(R.validate().pass);
  std::mt19937_64 rng(73);
  double worst_comm = 0.0;
  for (int s = 0; s < 20; ++s) {
    Vec x = ball_sample(rng, 3, 2.0);
    Vec y = ball_sample(rng, 3, 2.0);
    worst_comm = std::max(worst_comm, commutation_residual(R, x, y));
  }
  CHECK(worst_comm > 1e-5);
}
