#pragma once

// Test-only reference computations. None of these call into the library's
// quadrature, Dicke expansion or partial-trace code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "disentangle/devices.hpp"
#include "disentangle/states.hpp"

namespace oracle {

using disentangle::Complex;

/// Composite Simpson in u = cos(theta) of g(theta) against sin(theta) dtheta / 2.
template <class G>
double simpson_polar(G&& g, int intervals = 20000) {
  const double h = 2.0 / intervals;
  double acc = g(std::numbers::pi) + g(0.0);
  for (int i = 1; i < intervals; ++i) {
    const double u = -1.0 + i * h;
    acc += (i % 2 == 1 ? 4.0 : 2.0) * g(std::acos(u));
  }
  return acc * h / 3.0 / 2.0;
}

/// Normalized sum over k of |0...psi_k...0>, built from explicit tensor
/// products; qubit 1 is the most significant bit.
inline std::vector<Complex> brute_symmetrize(Complex a, Complex b, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> out(dim);
  for (int k = 1; k <= n; ++k) {
    // |0>^{k-1} (x) (a|0> + b|1>) (x) |0>^{n-k}
    std::vector<Complex> term{1.0};
    for (int q = 1; q <= n; ++q) {
      std::vector<Complex> next;
      const Complex f0 = q == k ? a : Complex{1.0};
      const Complex f1 = q == k ? b : Complex{0.0};
      for (const auto& t : term) {
        next.push_back(t * f0);
        next.push_back(t * f1);
      }
      term = std::move(next);
    }
    for (std::size_t i = 0; i < dim; ++i) out[i] += term[i];
  }
  double nrm = 0.0;
  for (const auto& c : out) nrm += std::norm(c);
  for (auto& c : out) c /= std::sqrt(nrm);
  return out;
}

/// rho = M M^dagger with M the 2 x 2^{n-1} reshaping of the state around
/// qubit `which`.
inline Eigen::Matrix2cd brute_reduced(const std::vector<Complex>& amps, int n, int which) {
  const int rest = n - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, Eigen::Index{1} << rest);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    int row = 0;
    std::size_t col = 0;
    for (int q = 1; q <= n; ++q) {
      const int bit = static_cast<int>((i >> (n - q)) & 1u);
      if (q == which) {
        row = bit;
      } else {
        col = (col << 1) | static_cast<std::size_t>(bit);
      }
    }
    m(row, static_cast<Eigen::Index>(col)) = amps[i];
  }
  return m * m.adjoint();
}

inline double uniform(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Haar-uniform qubit.
inline disentangle::PureQubit random_qubit(std::mt19937_64& rng) {
  const double theta = std::acos(std::clamp(1.0 - 2.0 * uniform(rng), -1.0, 1.0));
  double phi = 2.0 * std::numbers::pi * uniform(rng);
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  return {theta, phi};
}

inline Complex gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

inline std::vector<Complex> random_state(std::mt19937_64& rng, int n) {
  std::vector<Complex> v(std::size_t{1} << n);
  double nrm = 0.0;
  for (auto& c : v) {
    c = gaussian_complex(rng);
    nrm += std::norm(c);
  }
  for (auto& c : v) c /= std::sqrt(nrm);
  return v;
}

inline disentangle::DickeVector random_dicke(std::mt19937_64& rng, int n) {
  const Complex a = gaussian_complex(rng);
  const Complex b = gaussian_complex(rng);
  const double nrm = std::sqrt(std::norm(a) + std::norm(b));
  return {n, a / nrm, b / nrm};
}

/// Random isometry C^2 -> C^2 (x) C^4 by Gram-Schmidt of two Gaussian
/// vectors; column 0 = (D1, D2), column 1 = (D3, D4).
inline disentangle::DeviceTransform random_transform(std::mt19937_64& rng, int n) {
  Eigen::Matrix<Complex, 8, 2> m;
  for (int i = 0; i < 8; ++i) {
    m(i, 0) = gaussian_complex(rng);
    m(i, 1) = gaussian_complex(rng);
  }
  m.col(0).normalize();
  m.col(1) -= m.col(0) * m.col(0).dot(m.col(1));
  m.col(1).normalize();
  disentangle::DeviceTransform t{n, {}};
  for (int k = 0; k < 4; ++k) {
    t.d[0][static_cast<std::size_t>(k)] = m(k, 0);
    t.d[1][static_cast<std::size_t>(k)] = m(4 + k, 0);
    t.d[2][static_cast<std::size_t>(k)] = m(k, 1);
    t.d[3][static_cast<std::size_t>(k)] = m(4 + k, 1);
  }
  return t;
}

}  // namespace oracle
