#include "lieint/factorization.hpp"

#include <cmath>
#include <sstream>

namespace lieint {

namespace {

std::vector<Vec> components_from_coords(const Decomposition &D,
                                        const Vec &coords) {
  std::vector<Vec> out;
  out.reserve(D.num_blocks());
  for (int j = 0; j < D.num_blocks(); ++j)
    out.push_back(D.component(coords, j));
  return out;
}

Vec evaluate(const LieAlgebra &L, const Decomposition &D, const Vec &coords,
             const BchConfig &cfg) {
  return bch_multi(L, components_from_coords(D, coords), cfg);
}

ChartPoint make_point(const Decomposition &D, const Vec &coords,
                      double residual) {
  return {components_from_coords(D, coords), residual};
}

} // namespace

ChartPoint factorize_seeded(const LieAlgebra &L, const Decomposition &D,
                            const Vec &z, const Vec &seed_coords,
                            const BchConfig &bch_cfg,
                            const NewtonConfig &cfg) {
  if (z.size() != L.dim())
    throw std::invalid_argument("factorize: dimension mismatch");

  const int d = L.dim();
  Vec u = seed_coords;
  Vec f = evaluate(L, D, u, bch_cfg) - z;
  double res = f.norm();

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (res <= cfg.residual_tol)
      return make_point(D, u, res);

    Mat jac(d, d);
    for (int k = 0; k < d; ++k) {
      Vec up = u;
      up[k] += cfg.jacobian_step;
      jac.col(k) = (evaluate(L, D, up, bch_cfg) - z - f) / cfg.jacobian_step;
    }
    Eigen::FullPivLU<Mat> lu(jac);
    if (!lu.isInvertible()) {
      std::ostringstream os;
      os << "factorize: singular Jacobian at iteration " << iter
         << ", residual " << res;
      throw ChartOutOfRange(os.str(), make_point(D, u, res));
    }
    Vec step = lu.solve(-f);

    // Damped update: halve until the residual actually drops.
    double scale = 1.0;
    Vec u_next;
    Vec f_next;
    double res_next = 0.0;
    bool accepted = false;
    for (int halving = 0; halving <= cfg.max_halvings; ++halving) {
      u_next = u + scale * step;
      f_next = evaluate(L, D, u_next, bch_cfg) - z;
      res_next = f_next.norm();
      if (res_next < res || res_next <= cfg.residual_tol) {
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) {
      std::ostringstream os;
      os << "factorize: no residual decrease after " << cfg.max_halvings
         << " halvings, residual " << res;
      throw ChartOutOfRange(os.str(), make_point(D, u, res));
    }
    double step_norm = (u_next - u).norm();
    u = std::move(u_next);
    f = std::move(f_next);
    res = res_next;
    if (D.from_block_coords(u).norm() > cfg.domain_radius) {
      std::ostringstream os;
      os << "factorize: iterate left the domain ball, norm "
         << D.from_block_coords(u).norm();
      throw ChartOutOfRange(os.str(), make_point(D, u, res));
    }
    if (step_norm <= cfg.step_tol && res <= std::sqrt(cfg.residual_tol))
      return make_point(D, u, res);
  }
  if (res <= cfg.residual_tol)
    return make_point(D, u, res);
  std::ostringstream os;
  os << "factorize: no convergence in " << cfg.max_iter
     << " iterations, residual " << res;
  throw ChartOutOfRange(os.str(), make_point(D, u, res));
}

ChartPoint factorize(const LieAlgebra &L, const Decomposition &D, const Vec &z,
                     const BchConfig &bch_cfg, const NewtonConfig &newton_cfg) {
  return factorize_seeded(L, D, z, D.block_coords(z), bch_cfg, newton_cfg);
}

FactorizedPath::FactorizedPath(AlgebraPtr algebra, Decomposition decomposition,
                               Vec x, Vec y, BchConfig bch_cfg,
                               NewtonConfig newton_cfg, double derivative_step)
    : algebra_(std::move(algebra)), decomposition_(std::move(decomposition)),
      x_(std::move(x)), y_(std::move(y)), bch_cfg_(bch_cfg),
      newton_cfg_(newton_cfg), derivative_step_(derivative_step) {}

Vec FactorizedPath::target(double t) const {
  return bch(*algebra_, t * x_, y_, bch_cfg_);
}

Vec FactorizedPath::coords_of(const ChartPoint &p) const {
  Vec coords(algebra_->dim());
  int col = 0;
  for (int j = 0; j < decomposition_.num_blocks(); ++j) {
    // Recover block coordinates of component j via least squares on its
    // block basis (the component lies in the block span by construction).
    const Mat &B = decomposition_.block(j);
    coords.segment(col, B.cols()) =
        B.colPivHouseholderQr().solve(p.components[j]);
    col += static_cast<int>(B.cols());
  }
  return coords;
}

ChartPoint FactorizedPath::at(double t) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto exact = cache_.find(t);
  if (exact != cache_.end())
    return exact->second;

  // Nearest cached sample (t = 0 is free: (0x)*y = y factorizes directly).
  double t_from = 0.0;
  Vec seed;
  if (cache_.empty()) {
    seed = decomposition_.block_coords(y_);
    try {
      cache_.emplace(0.0, factorize_seeded(*algebra_, decomposition_,
                                           target(0.0), seed, bch_cfg_,
                                           newton_cfg_));
    } catch (ChartOutOfRange &e) {
      e.at_t = 0.0;
      throw;
    }
  }
  auto it = cache_.lower_bound(t);
  if (it == cache_.end() ||
      (it != cache_.begin() &&
       std::abs(std::prev(it)->first - t) < std::abs(it->first - t)))
    --it;
  t_from = it->first;
  ChartPoint current = it->second;

  // Walk toward t, keeping consecutive targets within the continuation
  // step so warm-started Newton stays quadratic.
  double t_cur = t_from;
  while (t_cur != t) {
    double dz = (target(t) - target(t_cur)).norm();
    double t_next = t;
    if (dz > continuation_step_) {
      double frac = continuation_step_ / dz;
      t_next = t_cur + (t - t_cur) * std::min(1.0, frac);
    }
    try {
      current = factorize_seeded(*algebra_, decomposition_, target(t_next),
                                 coords_of(current), bch_cfg_, newton_cfg_);
    } catch (ChartOutOfRange &e) {
      e.at_t = t_next;
      throw;
    }
    cache_.emplace(t_next, current);
    t_cur = t_next;
  }
  return current;
}

Vec FactorizedPath::component_derivative_plain(double t, int j,
                                               double h) const {
  auto comp = [&](double s) { return at(s).components.at(j); };
  if (t - h >= 0.0 && t + h <= 1.0)
    return (comp(t + h) - comp(t - h)) / (2.0 * h);
  // Second-order one-sided difference at the interval endpoints.
  double sign = (t - h < 0.0) ? 1.0 : -1.0;
  return sign *
         (-3.0 * comp(t) + 4.0 * comp(t + sign * h) - comp(t + 2.0 * sign * h)) /
         (2.0 * h);
}

Vec FactorizedPath::component_derivative(double t, int j) const {
  const double h = derivative_step_;
  Vec dh = component_derivative_plain(t, j, h);
  Vec dh2 = component_derivative_plain(t, j, h / 2);
  return (4.0 * dh2 - dh) / 3.0;
}

} // namespace lieint
