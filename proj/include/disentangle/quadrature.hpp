#pragma once

#include <span>
#include <utility>
#include <vector>

#include "disentangle/kernels.hpp"

namespace disentangle {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Product rule for the normalized measure dOmega = sin(theta) dtheta dphi / 4 pi:
/// Gauss-Legendre in u = cos(theta) times the trapezoid rule in phi.
/// Exact for integrands polynomial of degree <= 2 n_theta - 1 in cos(theta)
/// and trigonometric of degree < n_phi in phi.
class BlochQuadrature {
 public:
  explicit BlochQuadrature(int n_theta = 64, int n_phi = 64);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }

  /// Full tensor-product rule; weights sum to 1.
  std::span<const SphereNode> nodes() const { return nodes_; }
  /// Polar factor only (phi integrated out); weights sum to 1.
  std::span<const SphereNode> polar_nodes() const { return polar_; }

 private:
  int n_theta_;
  int n_phi_;
  std::vector<SphereNode> nodes_;
  std::vector<SphereNode> polar_;
};

/// Integral of f(theta, phi) against dOmega.
template <class F>
double bloch_average(F&& f, const BlochQuadrature& q) {
  return kernels::omp::weighted_sum(q.nodes(), std::forward<F>(f), 0.0);
}

/// Integral of an azimuth-independent g(theta) against dOmega; uses only the
/// polar rule.
template <class G>
double polar_average(G&& g, const BlochQuadrature& q) {
  return kernels::omp::weighted_sum(
      q.polar_nodes(), [&](double theta, double) { return g(theta); }, 0.0);
}

}  // namespace disentangle
