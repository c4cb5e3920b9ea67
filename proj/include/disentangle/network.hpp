#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "disentangle/states.hpp"

namespace disentangle {

inline constexpr int kMaxCascadeQubits = 20;

/// C-NOT gates (control k, target N) for k = 1..N-1, applied k = 1 first.
struct CnotCascade {
  int n;
  std::vector<std::pair<int, int>> gates;
};

CnotCascade make_cascade(int n);

FullStateVector apply_cnot(const FullStateVector& state, int control, int target);
FullStateVector apply_cascade(const FullStateVector& state, const CnotCascade& cascade);

/// Symmetric state of psi with N-1 ancillas, pushed through the cascade.
FullStateVector run_cascade(const PureQubit& psi, int n);

/// Cascade output for a Dicke input without a statevector, as amplitudes on
/// |N-1;0>|0>, |N-1;0>|1> and |N-1;1>|1>. Valid for any N.
struct CascadeDickeImage {
  Complex zero_zero;
  Complex zero_one;
  Complex one_one;
};
CascadeDickeImage cascade_on_dicke(const DickeVector& v);

/// |v+> = (sqrt(N-1)|N-1;1> + |N-1;0>)/sqrt N, |v-> = (sqrt(N-1)|N-1;0> - |N-1;1>)/sqrt N
/// on the first N-1 qubits.
std::pair<FullStateVector, FullStateVector> v_vectors(int n);

/// Cascade output written as (sqrt N / norm)(|v+>|psi> + sqrt(N-1) cos(theta/2)|v->|0>).
struct OutcomeDecomposition {
  Complex amp_plus_psi;  // coefficient of |v+>|psi>
  Complex amp_minus;     // coefficient of |v->|0>
  double normalization;  // sqrt(N^2 cos^2(theta/2) + N sin^2(theta/2))
  double residual;       // norm of the part outside that two-term form
  double plus_weight() const { return std::norm(amp_plus_psi); }
  double minus_weight() const { return std::norm(amp_minus); }
};

/// Projects the first N-1 qubits of `output` onto v+ and v-. Throws
/// DecompositionError if the v+ branch is not proportional to psi, the v-
/// branch is not proportional to |0>, or weight is left outside span{v+, v-}.
OutcomeDecomposition decompose(const FullStateVector& output, const PureQubit& psi, int n);

/// 1 / (N cos^2(theta/2) + sin^2(theta/2)).
double success_probability(double theta, int n);

/// Last qubit conditioned on the v+ outcome.
PureQubit post_selected_state(const FullStateVector& output, int n);

/// Post-selected last qubit computed from the Dicke-basis image; needs no
/// statevector, so it covers N above kMaxCascadeQubits.
PureQubit post_selected_state(const CascadeDickeImage& image, int n);

struct ShotCounts {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
};

inline constexpr std::string_view kShotRng = "mt19937_64/seed_seq(seed_lo,seed_hi,chunk)/53-bit-uniform";
inline constexpr std::uint64_t kShotChunk = 1 << 16;

/// Bernoulli(success_probability) shots. Shots are split into fixed chunks of
/// kShotChunk, each drawn from its own generator seeded by (seed, chunk
/// index), so counts do not depend on the thread count.
ShotCounts sample_shots(const PureQubit& psi, int n, std::uint64_t shots, std::uint64_t seed);

}  // namespace disentangle
