#include "lieint/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <functional>
#include <future>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace lieint {

Vec ball_sample(std::mt19937_64 &rng, int dim, double radius) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i)
    v[i] = gauss(rng);
  double n = v.norm();
  if (n == 0.0)
    return Vec::Zero(dim);
  return v * (radius * std::pow(uni(rng), 1.0 / dim) / n);
}

Vec unit_sample(std::mt19937_64 &rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i)
    v[i] = gauss(rng);
  return v / v.norm();
}

namespace {

int thread_cap() {
  if (const char *env = std::getenv("LIE_INTEGRATE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1)
      return n;
  }
  return 1;
}

struct PendingCheck {
  std::string name;
  std::string kind;
  std::function<double(std::mt19937_64 &)> run;
};

struct SuiteContext {
  const CatalogEntry &entry;
  int samples;      // default per check
  int samples_grid; // for checks that sweep a t-grid per sample
  int samples_structural;
  GaussLegendre quad{16};
  BchConfig bch_cfg;
  NewtonConfig newton_cfg;
  std::vector<PendingCheck> checks;

  void add(const std::string &name, const std::string &kind,
           std::function<double(std::mt19937_64 &)> fn) {
    checks.push_back({name, kind, std::move(fn)});
  }
};

SmoothPath quadratic_path(const Vec &a, const Vec &b) {
  return {[a, b](double t) { return Vec(t * a + t * t * b); },
          [a, b](double t) { return Vec(a + 2.0 * t * b); }, 0.0, 1.0, 1e-5};
}

void add_algebra_checks(SuiteContext &ctx) {
  const CatalogEntry &e = ctx.entry;
  const LieAlgebra &L = *e.algebra;
  const std::string prefix = e.name + "/algebra/";

  ctx.add(prefix + "validate", "algebra_validation",
          [&L](std::mt19937_64 &) {
            AlgebraValidation v = L.validate();
            return std::max(v.antisymmetry_residual, v.jacobi_residual);
          });

  if (e.faithful) {
    const Representation &F = *e.faithful;
    ctx.add(prefix + "bch-oracle", "bch_oracle",
            [&ctx, &L, &F](std::mt19937_64 &rng) {
              double worst = 0.0;
              for (int s = 0; s < ctx.samples; ++s) {
                Vec x = ball_sample(rng, L.dim(), 0.3);
                Vec y = ball_sample(rng, L.dim(), 0.3);
                Mat G = (F.apply(x).exp() * F.apply(y).exp()).log();
                // Pull the matrix log back to basis coordinates via the
                // linear system over vectorized generators.
                Mat basis(F.dim_H() * F.dim_H(), L.dim());
                for (int i = 0; i < L.dim(); ++i)
                  basis.col(i) =
                      Eigen::Map<const Vec>(F.matrices()[i].data(),
                                            F.dim_H() * F.dim_H());
                Vec g = Eigen::Map<const Vec>(G.data(), G.size());
                Vec coords = basis.colPivHouseholderQr().solve(g);
                worst = std::max(
                    worst, (bch(L, x, y, ctx.bch_cfg) - coords).norm());
              }
              return worst;
            });
  }

  ctx.add(prefix + "bch-symmetry", "bch_symmetry",
          [&ctx, &L](std::mt19937_64 &rng) {
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              Vec x = ball_sample(rng, L.dim(), 0.3);
              Vec y = ball_sample(rng, L.dim(), 0.3);
              worst = std::max(worst, (bch(L, x, y, ctx.bch_cfg) +
                                       bch(L, -y, -x, ctx.bch_cfg))
                                          .norm());
            }
            return worst;
          });

  ctx.add(prefix + "bch-cancellation", "bch_cancellation",
          [&ctx, &L](std::mt19937_64 &rng) {
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              Vec x = ball_sample(rng, L.dim(), 0.5);
              worst =
                  std::max(worst, bch(L, x, Vec(-x), ctx.bch_cfg).norm());
            }
            return worst;
          });

  ctx.add(prefix + "logderiv-ray", "logderiv_ray",
          [&ctx, &L](std::mt19937_64 &rng) {
            std::uniform_real_distribution<double> ut(0.1, 1.0);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              Vec x = ball_sample(rng, L.dim(), 1.0);
              double t = ut(rng);
              worst = std::max(
                  worst,
                  (log_derivative(L, ray_path(x), t, ctx.quad) - x).norm());
            }
            return worst;
          });

  ctx.add(prefix + "logderiv-equivalence", "logderiv_equivalence",
          [&ctx, &L](std::mt19937_64 &rng) {
            std::uniform_real_distribution<double> ut(0.1, 0.9);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              SmoothPath p = quadratic_path(ball_sample(rng, L.dim(), 0.3),
                                            ball_sample(rng, L.dim(), 0.3));
              double t = ut(rng);
              Vec a = log_derivative(L, p, t, ctx.quad);
              Vec b = log_derivative_by_definition(L, p, t, ctx.bch_cfg);
              worst = std::max(worst, (a - b).norm());
            }
            return worst;
          });

  ctx.add(prefix + "product-rule", "product_rule",
          [&ctx, &L](std::mt19937_64 &rng) {
            std::uniform_real_distribution<double> ut(0.1, 0.9);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              SmoothPath a = quadratic_path(ball_sample(rng, L.dim(), 0.15),
                                            ball_sample(rng, L.dim(), 0.1));
              SmoothPath b = quadratic_path(ball_sample(rng, L.dim(), 0.15),
                                            ball_sample(rng, L.dim(), 0.1));
              worst = std::max(worst, product_rule_residual(
                                          L, a, b, ut(rng), ctx.quad,
                                          ctx.bch_cfg));
            }
            return worst;
          });
}

void add_decomposition_checks(SuiteContext &ctx, const Decomposition &D) {
  const CatalogEntry &e = ctx.entry;
  const LieAlgebra &L = *e.algebra;
  const std::string prefix = e.name + "/" + D.name() + "/";

  ctx.add(prefix + "factorize-roundtrip", "factorize_roundtrip",
          [&ctx, &L, &D](std::mt19937_64 &rng) {
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              Vec z = ball_sample(rng, L.dim(), 0.15);
              ChartPoint p =
                  factorize(L, D, z, ctx.bch_cfg, ctx.newton_cfg);
              worst = std::max(
                  worst,
                  (bch_multi(L, p.components, ctx.bch_cfg) - z).norm());
            }
            return worst;
          });

  if (D.num_blocks() >= 2) {
    ctx.add(prefix + "structural-identity", "structural_identity",
            [&ctx, &L, &D](std::mt19937_64 &rng) {
              std::uniform_real_distribution<double> ut(0.2, 0.8);
              double worst = 0.0;
              for (int s = 0; s < ctx.samples_structural; ++s) {
                Vec x = ball_sample(rng, L.dim(), 0.15);
                Vec y = ball_sample(rng, L.dim(), 0.1);
                worst = std::max(
                    worst, structural_identity_residual(
                               L, D, x, y, ut(rng), ctx.quad, ctx.bch_cfg,
                               ctx.newton_cfg));
              }
              return worst;
            });
  }
}

void add_representation_checks(SuiteContext &ctx, const Representation &R) {
  const CatalogEntry &e = ctx.entry;
  const LieAlgebra &L = *e.algebra;
  const std::string prefix = e.name + "/" + R.name() + "/";

  ctx.add(prefix + "rep-validate", "rep_validation",
          [&R](std::mt19937_64 &) {
            RepresentationValidation v = R.validate();
            return std::max(v.homomorphism_residual, v.skew_residual);
          });

  ctx.add(prefix + "commutation", "commutation",
          [&ctx, &L, &R](std::mt19937_64 &rng) {
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s)
              worst = std::max(
                  worst,
                  commutation_residual(R, ball_sample(rng, L.dim(), 2.0),
                                       ball_sample(rng, L.dim(), 2.0)));
            return worst;
          });

  ctx.add(prefix + "constancy", "constancy",
          [&ctx, &L, &R](std::mt19937_64 &rng) {
            auto grid = uniform_grid(11);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s)
              worst = std::max(
                  worst,
                  constancy_residual(R, ball_sample(rng, L.dim(), 1.0),
                                     ball_sample(rng, L.dim(), 1.0), grid,
                                     unit_sample(rng, R.dim_H())));
            return worst;
          });

  ctx.add(prefix + "duhamel", "duhamel",
          [&ctx, &L, &R](std::mt19937_64 &rng) {
            std::uniform_real_distribution<double> ut(0.2, 1.0);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s)
              worst = std::max(
                  worst,
                  duhamel_residual(R, ball_sample(rng, L.dim(), 1.0),
                                   ball_sample(rng, L.dim(), 1.0), ut(rng),
                                   unit_sample(rng, R.dim_H()), ctx.quad));
            return worst;
          });

  if (R.skew()) {
    ctx.add(prefix + "fsss-pairing", "fsss_pairing",
            [&ctx, &L, &R](std::mt19937_64 &rng) {
              double worst = 0.0;
              for (int s = 0; s < ctx.samples; ++s)
                worst = std::max(
                    worst, fsss_pairing_residual(
                               R, ball_sample(rng, L.dim(), 1.0),
                               ball_sample(rng, L.dim(), 1.0),
                               unit_sample(rng, R.dim_H()),
                               unit_sample(rng, R.dim_H())));
              return worst;
            });
  }

  ctx.add(prefix + "derpath", "derpath",
          [&ctx, &L, &R](std::mt19937_64 &rng) {
            std::uniform_real_distribution<double> ut(0.2, 0.8);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              SmoothPath p = quadratic_path(ball_sample(rng, L.dim(), 0.5),
                                            ball_sample(rng, L.dim(), 0.3));
              worst = std::max(
                  worst, derpath_residual(R, p, ut(rng),
                                          unit_sample(rng, R.dim_H()),
                                          ctx.quad));
            }
            return worst;
          });
}

void add_local_rep_checks(SuiteContext &ctx, const Decomposition &D,
                          const Representation &R) {
  const CatalogEntry &e = ctx.entry;
  const LieAlgebra &L = *e.algebra;
  const std::string prefix =
      e.name + "/" + D.name() + "/" + R.name() + "/";

  // Shared across the lambdas below; pi caches nothing, so this is only
  // construction-time validation amortization.
  auto LR = std::make_shared<LocalRepresentation>(R, D, ctx.bch_cfg,
                                                  ctx.newton_cfg);

  ctx.add(prefix + "multiplicativity", "multiplicativity",
          [&ctx, &L, LR](std::mt19937_64 &rng) {
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s)
              worst = std::max(worst, multiplicativity_residual(
                                          *LR, ball_sample(rng, L.dim(), 0.12),
                                          ball_sample(rng, L.dim(), 0.12)));
            return worst;
          });

  ctx.add(prefix + "uniqueness", "uniqueness",
          [&ctx, &L, LR](std::mt19937_64 &rng) {
            const std::vector<double> short_grid{0.5, 1.0};
            auto long_grid = uniform_grid(21);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s) {
              Vec x = ball_sample(rng, L.dim(), 0.1);
              Vec y = ball_sample(rng, L.dim(), 0.1);
              Vec v = unit_sample(rng, LR->rep().dim_H());
              const auto &grid = (s == 0) ? long_grid : short_grid;
              worst = std::max(worst, uniqueness_check(*LR, x, y, v, grid));
            }
            return worst;
          });

  ctx.add(prefix + "ode", "ode",
          [&ctx, &L, LR](std::mt19937_64 &rng) {
            auto grid = uniform_grid(21);
            double worst = 0.0;
            for (int s = 0; s < ctx.samples_grid; ++s)
              worst = std::max(
                  worst, ode_residual(*LR, ball_sample(rng, L.dim(), 0.1),
                                      ball_sample(rng, L.dim(), 0.1),
                                      unit_sample(rng, LR->rep().dim_H()),
                                      grid));
            return worst;
          });

  ctx.add(prefix + "derived-rep", "derived_rep",
          [&ctx, &L, LR](std::mt19937_64 &rng) {
            double worst = 0.0;
            for (int s = 0; s < ctx.samples; ++s)
              worst = std::max(
                  worst,
                  derived_rep_residual(*LR, ball_sample(rng, L.dim(), 0.1),
                                       unit_sample(rng, LR->rep().dim_H())));
            return worst;
          });

  if (R.skew()) {
    ctx.add(prefix + "unitarity", "unitarity",
            [&ctx, &L, LR](std::mt19937_64 &rng) {
              double worst = 0.0;
              for (int s = 0; s < ctx.samples; ++s) {
                Mat U = LR->pi(ball_sample(rng, L.dim(), 0.2));
                worst = std::max(
                    worst, (U.transpose() * U -
                            Mat::Identity(U.rows(), U.cols()))
                               .norm());
              }
              return worst;
            });
  }
}

} // namespace

VerificationReport run_suite(const CatalogEntry &entry, std::uint64_t seed,
                             SuiteLevel level) {
  const bool quick = level == SuiteLevel::quick;
  SuiteContext ctx{entry,
                   quick ? 10 : 100,
                   quick ? 2 : 5,
                   quick ? 5 : 30};

  add_algebra_checks(ctx);
  for (const auto &D : entry.decompositions)
    add_decomposition_checks(ctx, D);
  for (const auto &R : entry.representations)
    add_representation_checks(ctx, R);
  for (const auto &D : entry.decompositions)
    for (const auto &R : entry.representations)
      add_local_rep_checks(ctx, D, R);

  VerificationReport report;
  report.entry = entry.name;
  report.seed = seed;
  report.level = quick ? "quick" : "full";
  report.tolerances = default_tolerances();
  report.config = {
      {"samples", std::to_string(ctx.samples)},
      {"samples_grid", std::to_string(ctx.samples_grid)},
      {"samples_structural", std::to_string(ctx.samples_structural)},
      {"quadrature_nodes", "16"},
      {"bch_max_order", std::to_string(ctx.bch_cfg.max_order)},
      {"threads", std::to_string(thread_cap())},
  };

  auto run_one = [&](const PendingCheck &c) -> CheckRecord {
    CheckRecord rec;
    rec.name = c.name;
    rec.tolerance = default_tolerances().at(c.kind);
    std::mt19937_64 rng(seed ^ fnv1a(c.name));
    std::ostringstream digest;
    digest << entry.name << "|" << c.name << "|" << seed << "|"
           << report.level;
    rec.input_digest = std::to_string(fnv1a(digest.str()));
    auto start = std::chrono::steady_clock::now();
    try {
      rec.residual = c.run(rng);
      rec.pass = rec.residual <= rec.tolerance;
    } catch (const std::exception &ex) {
      rec.error = ex.what();
      rec.residual = std::numeric_limits<double>::infinity();
      rec.pass = false;
    }
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
  };

  const int threads = thread_cap();
  if (threads <= 1) {
    for (const auto &c : ctx.checks)
      report.records.push_back(run_one(c));
  } else {
    std::vector<std::future<CheckRecord>> futures;
    std::size_t next = 0;
    while (next < ctx.checks.size() || !futures.empty()) {
      while (next < ctx.checks.size() &&
             futures.size() < static_cast<std::size_t>(threads))
        futures.push_back(std::async(std::launch::async, run_one,
                                     std::cref(ctx.checks[next++])));
      report.records.push_back(futures.front().get());
      futures.erase(futures.begin());
    }
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const CheckRecord &a, const CheckRecord &b) {
              return a.name < b.name;
            });
  return report;
}

} // namespace lieint
