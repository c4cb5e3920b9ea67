#include "disentangle/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "disentangle/errors.hpp"

namespace disentangle {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace

PureQubit::PureQubit(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw DomainError("phi must lie in [0, 2 pi), got " + std::to_string(phi));
  }
}

PureQubit PureQubit::one() { return {std::numbers::pi, 0.0}; }

PureQubit PureQubit::from_amplitudes(Complex a0, Complex a1) {
  const double r0 = std::abs(a0);
  const double r1 = std::abs(a1);
  if (r0 == 0.0 && r1 == 0.0) throw DomainError("zero vector has no qubit state");
  const double theta = std::min(2.0 * std::atan2(r1, r0), std::numbers::pi);
  if (r0 == 0.0 || r1 == 0.0) return {theta, 0.0};
  return {theta, wrap_phase(std::arg(a1) - std::arg(a0))};
}

Complex PureQubit::alpha() const { return {std::cos(0.5 * theta_), 0.0}; }

Complex PureQubit::beta() const { return std::polar(std::sin(0.5 * theta_), phi_); }

PureQubit PureQubit::orthogonal() const {
  return {std::numbers::pi - theta_, wrap_phase(phi_ + std::numbers::pi)};
}

double overlap_sq(const PureQubit& a, const PureQubit& b) {
  return std::norm(std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta());
}

DickeVector::DickeVector(int n_, Complex c0_, Complex c1_) : n(n_), c0(c0_), c1(c1_) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  const double norm2 = std::norm(c0) + std::norm(c1);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw ContractViolation("Dicke amplitudes not normalized: |c|^2 = " + std::to_string(norm2));
  }
}

DickeVector DickeVector::from_angles(int n, double theta, double phi) {
  return {n, std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi)};
}

Complex inner(const DickeVector& a, const DickeVector& b) {
  if (a.n != b.n) throw DimensionMismatch("Dicke vectors of different qubit counts");
  return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}

FullStateVector::FullStateVector(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  if (n > kMaxStatevectorQubits) {
    throw CapacityError("statevector limited to " + std::to_string(kMaxStatevectorQubits) +
                        " qubits, got " + std::to_string(n));
  }
  if (amps_.size() != (std::size_t{1} << n)) {
    throw DimensionMismatch("expected 2^" + std::to_string(n) + " amplitudes");
  }
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10 * std::pow(2.0, 0.5 * n)) {
    throw ContractViolation("statevector not normalized: norm^2 = " + std::to_string(norm2));
  }
}

FullStateVector FullStateVector::basis(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxStatevectorQubits) throw CapacityError("unsupported qubit count");
  std::vector<Complex> amps(std::size_t{1} << n);
  if (index >= amps.size()) throw DomainError("basis index out of range");
  amps[index] = 1.0;
  return {n, std::move(amps)};
}

double norm(const FullStateVector& v) {
  double s = 0.0;
  for (const auto& a : v.amps()) s += std::norm(a);
  return std::sqrt(s);
}

Complex inner(const FullStateVector& a, const FullStateVector& b) {
  if (a.n() != b.n()) throw DimensionMismatch("statevectors of different qubit counts");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

DensityOperator::DensityOperator(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionMismatch("density operator must be a non-empty square matrix");
  }
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm >= 1e-10) throw ContractViolation("density operator not Hermitian: " + std::to_string(herm));
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) >= 1e-10) {
    throw ContractViolation("density operator trace " + std::to_string(tr.real()) + " != 1");
  }
  if (min_eigenvalue() <= -1e-10) throw ContractViolation("density operator not positive semidefinite");
}

DensityOperator DensityOperator::pure(std::span<const Complex> amps) {
  Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
  return DensityOperator(v * v.adjoint());
}

double DensityOperator::min_eigenvalue() const {
  if (m_.rows() == 2) {
    // Closed form for the 2x2 case.
    const double a = m_(0, 0).real();
    const double d = m_(1, 1).real();
    const double off = std::abs(m_(0, 1));
    return 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace disentangle
