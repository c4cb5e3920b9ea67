#pragma once

#include "disentangle/quadrature.hpp"
#include "disentangle/states.hpp"

namespace disentangle {

/// Bloch angle of the diluted state: the symmetric N-qubit state built from
/// a qubit at polar angle `theta` is c0|N;0> + c1|N;1> with
/// cos(result/2) = sqrt(N) cos(theta/2) / sqrt(sin^2(theta/2) + N cos^2(theta/2)).
double dilute_angle(double theta, int n);

/// The normalized symmetrization of psi with N-1 ancillas in |0>.
DickeVector symmetric_state(const PureQubit& psi, int n);

/// Expands the Dicke amplitudes into 2^n basis amplitudes.
FullStateVector dicke_to_statevector(const DickeVector& v);

/// Normalized |N;1> of n qubits as a full statevector.
FullStateVector dicke_one(int n);

/// Reduced state of qubit `which` (1-based).
DensityOperator reduced_qubit(const FullStateVector& state, int which);

/// Closed-form single-qubit marginal of c0|N;0> + c1|N;1>.
DensityOperator dicke_marginal(const DickeVector& v);

/// <psi|rho|psi> for a 2x2 rho.
double fidelity_pure(const PureQubit& psi, const DensityOperator& rho);

/// Average fidelity between one qubit of the diluted state and the original
/// qubit: (N^2 - 1 - 2 ln N) / (2 (N-1)^2), 1 at N = 1.
double diluted_avg_fidelity(int n);

/// The integrand of diluted_avg_fidelity at one input, via the closed-form
/// marginal.
double diluted_fidelity(double theta, double phi, int n);

}  // namespace disentangle
