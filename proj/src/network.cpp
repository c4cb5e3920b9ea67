#include "disentangle/network.hpp"

#include <cmath>
#include <random>
#include <string>

#include "disentangle/errors.hpp"
#include "disentangle/kernels.hpp"
#include "disentangle/symmetric_core.hpp"

namespace disentangle {
namespace {

constexpr double kBranchTolerance = 1e-10;

void require_cascade_size(int n) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  if (n > kMaxCascadeQubits) {
    throw CapacityError("cascade statevector limited to " + std::to_string(kMaxCascadeQubits) + " qubits");
  }
}

}  // namespace

CnotCascade make_cascade(int n) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  CnotCascade c{n, {}};
  for (int k = 1; k < n; ++k) c.gates.emplace_back(k, n);
  return c;
}

FullStateVector apply_cnot(const FullStateVector& state, int control, int target) {
  const int n = state.n();
  if (control < 1 || control > n || target < 1 || target > n) throw DomainError("qubit index out of range");
  if (control == target) throw DomainError("control and target must differ");
  std::vector<Complex> amps(state.amps().begin(), state.amps().end());
  kernels::omp::apply_cnot(amps, n, control, target);
  return {n, std::move(amps)};
}

FullStateVector apply_cascade(const FullStateVector& state, const CnotCascade& cascade) {
  if (state.n() != cascade.n) throw DimensionMismatch("cascade and state qubit counts differ");
  std::vector<Complex> amps(state.amps().begin(), state.amps().end());
  for (const auto& [control, target] : cascade.gates) kernels::omp::apply_cnot(amps, cascade.n, control, target);
  return {cascade.n, std::move(amps)};
}

FullStateVector run_cascade(const PureQubit& psi, int n) {
  require_cascade_size(n);
  return apply_cascade(dicke_to_statevector(symmetric_state(psi, n)), make_cascade(n));
}

CascadeDickeImage cascade_on_dicke(const DickeVector& v) {
  const double nn = v.n;
  // P|N;0> = |N-1;0>|0>,  P|N;1> = (sqrt(N-1)|N-1;1> + |N-1;0>)|1> / sqrt N
  return {v.c0, v.c1 / std::sqrt(nn), v.c1 * std::sqrt((nn - 1.0) / nn)};
}

std::pair<FullStateVector, FullStateVector> v_vectors(int n) {
  if (n < 2) throw DomainError("v vectors need N >= 2");
  if (n - 1 > kMaxStatevectorQubits) throw CapacityError("v vectors limited by statevector capacity");
  const int m = n - 1;
  const double nn = n;
  const double a = std::sqrt((nn - 1.0) / nn);
  const double b = 1.0 / std::sqrt(nn);
  return {dicke_to_statevector(DickeVector(m, b, a)), dicke_to_statevector(DickeVector(m, a, -b))};
}

OutcomeDecomposition decompose(const FullStateVector& output, const PureQubit& psi, int n) {
  if (output.n() != n) throw DimensionMismatch("output qubit count differs from n");
  const double nn = n;
  const double c = std::cos(0.5 * psi.theta());
  const double s = std::sin(0.5 * psi.theta());
  const double normalization = std::sqrt(nn * nn * c * c + nn * s * s);
  if (n == 1) {
    // No ancillas: the whole state is the |v+>|psi> branch.
    const auto amps = output.amps();
    const Complex coef = std::conj(psi.alpha()) * amps[0] + std::conj(psi.beta()) * amps[1];
    const double res = std::sqrt(std::norm(amps[0] - coef * psi.alpha()) + std::norm(amps[1] - coef * psi.beta()));
    if (res > kBranchTolerance) throw DecompositionError("single-qubit output differs from psi");
    return {coef, 0.0, normalization, res};
  }
  const auto [vp, vm] = v_vectors(n);
  const auto amps = output.amps();
  std::array<Complex, 2> plus{};
  std::array<Complex, 2> minus{};
  for (std::size_t r = 0; r < vp.size(); ++r) {
    for (std::size_t bit = 0; bit < 2; ++bit) {
      plus[bit] += std::conj(vp[r]) * amps[2 * r + bit];
      minus[bit] += std::conj(vm[r]) * amps[2 * r + bit];
    }
  }
  // Part of the output outside span{v+, v-} (x) C^2, from the explicit
  // reconstruction.
  double outside_sq = 0.0;
  for (std::size_t r = 0; r < vp.size(); ++r) {
    for (std::size_t bit = 0; bit < 2; ++bit) {
      outside_sq += std::norm(amps[2 * r + bit] - vp[r] * plus[bit] - vm[r] * minus[bit]);
    }
  }
  const double outside = std::sqrt(outside_sq);

  const Complex amp_plus = std::conj(psi.alpha()) * plus[0] + std::conj(psi.beta()) * plus[1];
  const double plus_res =
      std::sqrt(std::norm(plus[0] - amp_plus * psi.alpha()) + std::norm(plus[1] - amp_plus * psi.beta()));
  const double minus_res = std::abs(minus[1]);
  const double residual = std::max({outside, plus_res, minus_res});
  if (residual > kBranchTolerance) {
    throw DecompositionError("cascade output has residual " + std::to_string(residual) +
                             " outside the two-branch form");
  }
  return {amp_plus, minus[0], normalization, residual};
}

double success_probability(double theta, int n) {
  const PureQubit check(theta, 0.0);
  if (n < 1) throw DomainError("qubit count must be >= 1");
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return 1.0 / (n * c * c + s * s);
}

PureQubit post_selected_state(const FullStateVector& output, int n) {
  if (output.n() != n) throw DimensionMismatch("output qubit count differs from n");
  const auto amps = output.amps();
  if (n == 1) return PureQubit::from_amplitudes(amps[0], amps[1]);
  const auto vp = v_vectors(n).first;
  Complex a0{0.0, 0.0};
  Complex a1{0.0, 0.0};
  for (std::size_t r = 0; r < vp.size(); ++r) {
    a0 += std::conj(vp[r]) * amps[2 * r];
    a1 += std::conj(vp[r]) * amps[2 * r + 1];
  }
  if (std::norm(a0) + std::norm(a1) < 1e-14) throw DecompositionError("v+ outcome has zero weight");
  return PureQubit::from_amplitudes(a0, a1);
}

PureQubit post_selected_state(const CascadeDickeImage& image, int n) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  const double nn = n;
  // |N-1;0> = (v+ + sqrt(N-1) v-)/sqrt N,  |N-1;1> = (sqrt(N-1) v+ - v-)/sqrt N
  const Complex a0 = image.zero_zero / std::sqrt(nn);
  const Complex a1 = image.zero_one / std::sqrt(nn) + image.one_one * std::sqrt((nn - 1.0) / nn);
  if (std::norm(a0) + std::norm(a1) < 1e-14) throw DecompositionError("v+ outcome has zero weight");
  return PureQubit::from_amplitudes(a0, a1);
}

ShotCounts sample_shots(const PureQubit& psi, int n, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw DomainError("need at least one shot");
  const double p = success_probability(psi.theta(), n);
  const auto chunks = static_cast<std::int64_t>((shots + kShotChunk - 1) / kShotChunk);
  std::uint64_t plus = 0;
#pragma omp parallel for schedule(static) reduction(+ : plus)
  for (std::int64_t k = 0; k < chunks; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    const std::uint64_t begin = static_cast<std::uint64_t>(k) * kShotChunk;
    const std::uint64_t count = std::min(kShotChunk, shots - begin);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) ++plus;
    }
  }
  return {plus, shots - plus};
}

}  // namespace disentangle
