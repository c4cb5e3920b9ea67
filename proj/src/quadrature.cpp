#include "disentangle/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "disentangle/errors.hpp"

namespace disentangle {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> w(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = wi;
    w[static_cast<std::size_t>(n - 1 - i)] = wi;
  }
  if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;
  return {std::move(x), std::move(w)};
}

BlochQuadrature::BlochQuadrature(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 2 || n_phi < 2) throw DomainError("BlochQuadrature needs at least 2x2 nodes");
  const auto [u, w] = gauss_legendre(n_theta);
  nodes_.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
  polar_.reserve(static_cast<std::size_t>(n_theta));
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(u[static_cast<std::size_t>(i)]);
    const double wt = 0.5 * w[static_cast<std::size_t>(i)];
    polar_.push_back({theta, 0.0, wt});
    for (int j = 0; j < n_phi; ++j) {
      nodes_.push_back({theta, 2.0 * std::numbers::pi * j / n_phi, wt / n_phi});
    }
  }
}

}  // namespace disentangle
