#pragma once

#include <vector>

namespace lieint {

/// Gauss-Legendre rule on [0, 1]. Nodes found by Newton iteration on the
/// Legendre polynomial; weights normalized so they sum to 1.
class GaussLegendre {
public:
  explicit GaussLegendre(int n = 16);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double> &nodes() const { return nodes_; }
  const std::vector<double> &weights() const { return weights_; }

  /// Integrate f over [a, b].
  template <typename F, typename T>
  T integrate(F &&f, double a, double b, T zero) const {
    T acc = zero;
    for (int i = 0; i < size(); ++i)
      acc += ((b - a) * weights_[i]) * f(a + (b - a) * nodes_[i]);
    return acc;
  }

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

} // namespace lieint
