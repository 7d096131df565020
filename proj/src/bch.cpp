#include "lieint/bch.hpp"

#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

namespace lieint {

namespace detail {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// Associative coefficient of the word w (length n) in log(e^x e^y),
// via log(1 + u) = sum_m (-1)^{m+1}/m u^m with u = e^x e^y - 1: split w
// into m blocks, each of the form x^p y^q, weighted by 1/(p! q!).
// Dynkin's theorem then maps the word to (1/n) times its right-nested
// bracket.
Rational word_coefficient(std::uint32_t w, int n) {
  std::vector<Rational> factorial(n + 1);
  factorial[0] = 1;
  for (int k = 1; k <= n; ++k)
    factorial[k] = factorial[k - 1] * k;

  // D[i][m]: weighted splits of the first i letters into m blocks.
  std::vector<std::vector<Rational>> D(n + 1,
                                       std::vector<Rational>(n + 1, 0));
  D[0][0] = 1;
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m <= i; ++m) {
      if (D[i][m] == 0)
        continue;
      int p = 0, q = 0;
      bool seen_y = false;
      for (int j = i; j < n; ++j) {
        int letter = (w >> j) & 1;
        if (letter == 0) {
          if (seen_y)
            break; // block must be x's then y's
          ++p;
        } else {
          seen_y = true;
          ++q;
        }
        D[j + 1][m + 1] += D[i][m] / (factorial[p] * factorial[q]);
      }
    }
  }

  Rational c = 0;
  for (int m = 1; m <= n; ++m) {
    if (D[n][m] == 0)
      continue;
    Rational t = D[n][m] / m;
    c += (m % 2 == 1) ? t : -t;
  }
  return c / n;
}

std::mutex table_mutex;
std::vector<std::vector<std::pair<std::uint32_t, double>>> table; // [order-1]

} // namespace

const std::vector<std::pair<std::uint32_t, double>> &dynkin_terms(int order) {
  std::lock_guard<std::mutex> lock(table_mutex);
  while (static_cast<int>(table.size()) < order) {
    int n = static_cast<int>(table.size()) + 1;
    std::vector<std::pair<std::uint32_t, double>> terms;
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
      // The innermost bracket pairs the last two letters; equal letters
      // kill the whole nested bracket.
      if (n >= 2 && ((w >> (n - 1)) & 1) == ((w >> (n - 2)) & 1))
        continue;
      Rational c = word_coefficient(w, n);
      if (c != 0)
        terms.emplace_back(w, static_cast<double>(c));
    }
    table.push_back(std::move(terms));
  }
  return table[order - 1];
}

} // namespace detail

namespace {

void check_finite(const Vec &v, const char *what) {
  if (!v.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite input");
}

} // namespace

BchResult bch_full(const LieAlgebra &L, const Vec &x, const Vec &y,
                   const BchConfig &cfg) {
  check_finite(x, "bch");
  check_finite(y, "bch");
  if (x.size() != L.dim() || y.size() != L.dim())
    throw std::invalid_argument("bch: dimension mismatch");
  if (cfg.max_order < 1)
    throw std::invalid_argument("bch: max_order must be >= 1");

  BchResult out;
  out.domain_warning = x.norm() + y.norm() >= 2.0 * cfg.domain_radius;

  const Mat ad_x = L.adjoint(x);
  const Mat ad_y = L.adjoint(y);

  Vec acc = Vec::Zero(L.dim());
  // Right-nested brackets of all words at the current order; the word's
  // first letter is bit 0, and [w] = ad_{w0} [w >> 1].
  std::vector<Vec> level{x, y};
  bool prev_small = false;
  for (int n = 1; n <= cfg.max_order; ++n) {
    if (n > 1) {
      std::vector<Vec> next(level.size() * 2);
      for (std::size_t s = 0; s < level.size(); ++s) {
        if (level[s].isZero(0.0)) {
          next[2 * s] = next[2 * s + 1] = level[s];
          continue;
        }
        next[2 * s] = ad_x * level[s];     // prepend x: suffix bits shift up
        next[2 * s + 1] = ad_y * level[s]; // prepend y
      }
      // Encoding check: word w at order n has suffix w >> 1 at order n-1
      // and first letter w & 1, so next[w] = A_{w&1} * level[w>>1] means
      // next index = (suffix << 1) | letter. The loop above stores
      // next[2s + letter] = A_letter * level[s], matching that layout.
      level = std::move(next);
    }
    Vec term = Vec::Zero(L.dim());
    for (const auto &[w, c] : detail::dynkin_terms(n))
      term += c * level[w];
    acc += term;
    out.orders_used = n;
    out.last_term_norm = term.norm();
    // Alternate orders can vanish by symmetry, so one tiny term alone is
    // not evidence of convergence.
    bool small = out.last_term_norm < cfg.term_tolerance;
    if (n > 1 && small && prev_small)
      break;
    prev_small = small;
  }
  out.value = std::move(acc);
  return out;
}

Vec bch(const LieAlgebra &L, const Vec &x, const Vec &y,
        const BchConfig &cfg) {
  return bch_full(L, x, y, cfg).value;
}

BchResult bch_multi_full(const LieAlgebra &L, const std::vector<Vec> &xs,
                         const BchConfig &cfg) {
  if (xs.empty())
    return {L.zero(), false, 0, 0.0};
  BchResult out{xs.front(), false, 0, 0.0};
  check_finite(out.value, "bch_multi");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    BchResult step = bch_full(L, out.value, xs[i], cfg);
    out.value = std::move(step.value);
    out.domain_warning = out.domain_warning || step.domain_warning;
    out.orders_used = std::max(out.orders_used, step.orders_used);
    out.last_term_norm = step.last_term_norm;
  }
  return out;
}

Vec bch_multi(const LieAlgebra &L, const std::vector<Vec> &xs,
              const BchConfig &cfg) {
  return bch_multi_full(L, xs, cfg).value;
}

Mat bch_differential_at_zero_right(const LieAlgebra &L, const Vec &x,
                                   const BchConfig &cfg) {
  check_finite(x, "bch_differential_at_zero_right");
  const int d = L.dim();
  Mat out(d, d);
  const double h = 1e-3;
  for (int k = 0; k < d; ++k) {
    Vec e = L.basis_vector(k);
    auto central = [&](double step) -> Vec {
      return (bch(L, step * e, x, cfg) - bch(L, -step * e, x, cfg)) /
             (2.0 * step);
    };
    Vec dh = central(h), dh2 = central(h / 2);
    out.col(k) = (4.0 * dh2 - dh) / 3.0;
  }
  return out;
}

} // namespace lieint
