#include "lieint/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace lieint {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1)
    throw std::invalid_argument("GaussLegendre: need at least one node");
  nodes_.resize(n);
  weights_.resize(n);
  // Roots of P_n on [-1, 1], seeded by the Chebyshev approximation.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
        break;
    }
    // Map to [0, 1]; weight 2/((1-x^2) P_n'^2) halves with the interval.
    nodes_[i] = 0.5 * (1.0 - x); // cos is decreasing, this orders ascending
    weights_[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

} // namespace lieint
