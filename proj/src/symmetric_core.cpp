#include "disentangle/symmetric_core.hpp"

#include <cmath>
#include <numbers>

#include "disentangle/errors.hpp"
#include "disentangle/kernels.hpp"

namespace disentangle {
namespace {

void require_qubit_count(int n) {
  if (n < 1) throw DomainError("qubit count must be >= 1, got " + std::to_string(n));
}

}  // namespace

double dilute_angle(double theta, int n) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
  require_qubit_count(n);
  if (theta == std::numbers::pi) return std::numbers::pi;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  // atan2 is insensitive to the common normalization.
  return 2.0 * std::atan2(s, std::sqrt(static_cast<double>(n)) * c);
}

DickeVector symmetric_state(const PureQubit& psi, int n) {
  require_qubit_count(n);
  if (n == 1) return {1, psi.alpha(), psi.beta()};
  const double root_n = std::sqrt(static_cast<double>(n));
  const double c = std::cos(0.5 * psi.theta());
  const double s = std::sin(0.5 * psi.theta());
  const double scale = 1.0 / std::sqrt(s * s + n * c * c);
  return {n, root_n * c * scale, std::polar(s * scale, psi.phi())};
}

FullStateVector dicke_to_statevector(const DickeVector& v) {
  if (v.n > kMaxStatevectorQubits) throw CapacityError("Dicke expansion limited to 24 qubits");
  std::vector<Complex> amps(std::size_t{1} << v.n);
  amps[0] = v.c0;
  const Complex spread = v.c1 / std::sqrt(static_cast<double>(v.n));
  for (int k = 1; k <= v.n; ++k) amps[qubit_mask(v.n, k)] = spread;
  return {v.n, std::move(amps)};
}

FullStateVector dicke_one(int n) { return dicke_to_statevector(DickeVector(n, 0.0, 1.0)); }

DensityOperator reduced_qubit(const FullStateVector& state, int which) {
  if (which < 1 || which > state.n()) {
    throw DomainError("qubit index " + std::to_string(which) + " outside 1.." + std::to_string(state.n()));
  }
  const auto m = kernels::omp::partial_trace_qubit(state.amps(), state.n(), which);
  Eigen::Matrix2cd rho;
  rho << m.p0, m.coherence, std::conj(m.coherence), m.p1;
  return DensityOperator(rho);
}

DensityOperator dicke_marginal(const DickeVector& v) {
  // (N-1)/N |0><0| + (1 - sqrt N)/N (|c0|^2 |0><0| + |c1|^2 |1><1|) + |psi_bar><psi_bar| / sqrt N.
  // The middle coefficient is negative for N > 1; only the sum is a state.
  const double n = v.n;
  const double root_n = std::sqrt(n);
  Eigen::Vector2cd bar(v.c0, v.c1);
  Eigen::Matrix2cd rho = (bar * bar.adjoint()) / root_n;
  rho(0, 0) += (n - 1.0) / n + (1.0 - root_n) / n * std::norm(v.c0);
  rho(1, 1) += (1.0 - root_n) / n * std::norm(v.c1);
  return DensityOperator(rho);
}

double fidelity_pure(const PureQubit& psi, const DensityOperator& rho) {
  if (rho.dim() != 2) throw DimensionMismatch("fidelity_pure needs a 2x2 density operator");
  const auto a = psi.amplitudes();
  Complex f{0.0, 0.0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) f += std::conj(a[i]) * rho(i, j) * a[j];
  }
  return f.real();
}

double diluted_avg_fidelity(int n) {
  require_qubit_count(n);
  if (n == 1) return 1.0;
  const double nn = n;
  return (nn * nn - 1.0 - 2.0 * std::log(nn)) / (2.0 * (nn - 1.0) * (nn - 1.0));
}

double diluted_fidelity(double theta, double phi, int n) {
  const PureQubit psi(theta, phi);
  return fidelity_pure(psi, dicke_marginal(symmetric_state(psi, n)));
}

}  // namespace disentangle
