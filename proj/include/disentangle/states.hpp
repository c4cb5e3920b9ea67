#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace disentangle {

using Complex = std::complex<double>;

inline constexpr int kMaxStatevectorQubits = 24;

/// Single-qubit pure state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>,
/// theta in [0, pi], phi in [0, 2 pi).
class PureQubit {
 public:
  PureQubit(double theta, double phi);

  static PureQubit zero() { return {0.0, 0.0}; }
  static PureQubit one();

  /// Builds the state from (unnormalized) amplitudes; the global phase is
  /// discarded so that the |0> amplitude becomes real non-negative.
  static PureQubit from_amplitudes(Complex a0, Complex a1);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  Complex alpha() const;
  Complex beta() const;
  std::array<Complex, 2> amplitudes() const { return {alpha(), beta()}; }

  /// Antipodal state on the Bloch sphere, orthogonal up to phase.
  PureQubit orthogonal() const;

 private:
  double theta_;
  double phi_;
};

/// Squared overlap |<a|b>|^2.
double overlap_sq(const PureQubit& a, const PureQubit& b);

/// State c0|N;0> + c1|N;1> in the two lowest Dicke sectors of N qubits.
struct DickeVector {
  DickeVector(int n, Complex c0, Complex c1);

  /// c0 = cos(theta/2), c1 = e^{i phi} sin(theta/2).
  static DickeVector from_angles(int n, double theta, double phi);

  int n;
  Complex c0;
  Complex c1;
};

Complex inner(const DickeVector& a, const DickeVector& b);

/// 2^n amplitudes. Qubit k (1-based) is bit (n - k) of the index, so qubit 1
/// is the most significant bit.
class FullStateVector {
 public:
  FullStateVector(int n, std::vector<Complex> amps);

  static FullStateVector basis(int n, std::uint64_t index);

  int n() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Complex> amps() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  /// Moves the amplitudes out; used by kernels that permute in place.
  std::vector<Complex> release() && { return std::move(amps_); }

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// Bit mask of qubit `which` (1-based, qubit 1 = MSB) in an n-qubit index.
constexpr std::uint64_t qubit_mask(int n, int which) {
  return std::uint64_t{1} << (n - which);
}

double norm(const FullStateVector& v);
Complex inner(const FullStateVector& a, const FullStateVector& b);

/// Hermitian, unit-trace, positive semidefinite matrix. Validated on
/// construction.
class DensityOperator {
 public:
  explicit DensityOperator(Eigen::MatrixXcd m);

  static DensityOperator pure(std::span<const Complex> amps);

  int dim() const { return static_cast<int>(m_.rows()); }
  Complex operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double min_eigenvalue() const;

 private:
  Eigen::MatrixXcd m_;
};

}  // namespace disentangle
