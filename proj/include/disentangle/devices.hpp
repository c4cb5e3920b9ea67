#pragma once

#include <array>
#include <cstdint>

#include "disentangle/quadrature.hpp"
#include "disentangle/states.hpp"

namespace disentangle {

inline constexpr int kMachineDim = 4;

/// Coordinates in the orthonormal machine basis |d_1>..|d_4>.
using MachineVector = std::array<Complex, kMachineDim>;

Complex inner(const MachineVector& a, const MachineVector& b);
double norm_sq(const MachineVector& v);

/// Disentangler acting on span{|N;0>, |N;1>} (x) |d_0>:
///   |N;0>|d_0> -> |N-1;0> (|0>|D1> + |1>|D2>)
///   |N;1>|d_0> -> |N-1;0> (|0>|D3> + |1>|D4>)
/// The |N-1;0> factor is implicit. d[k] holds D_{k+1}.
struct DeviceTransform {
  int n;
  std::array<MachineVector, 4> d;
};

struct UnitarityResiduals {
  double first;   // | |D1|^2 + |D2|^2 - 1 |
  double second;  // | |D3|^2 + |D4|^2 - 1 |
  double cross;   // | <D1|D3> + <D2|D4> |
  double max() const;
};

UnitarityResiduals unitarity_residuals(const DeviceTransform& t);

/// Largest violation of the phase-independence conditions
///   sqrt(N)<D1|D3> + N<D2|D1> = 0,  <D3|D2> = 0,  sqrt(N)<D2|D4> + N<D4|D3> = 0
/// and of the proportionality conditions
///   |D1| = |D4|,  (N+1)|D4|^2 = |D3|^2 + N|D2|^2 + 2 sqrt(N) Re<D4|D1>
/// that make the fidelity input independent.
double covariance_residual(const DeviceTransform& t);

/// Gram data of the machine vectors and the derived scalars used in the
/// optimality analysis.
struct GramSummary {
  std::array<double, 4> norms_sq;
  std::array<std::array<Complex, 4>, 4> gram;  // gram[j][k] = <D_{j+1}|D_{k+1}>
  double x;     // Re<D4|D1> / |D4|^2
  double u;     // Re<D1|D4> / (|D1| |D4|)
  double eta1;  // |D1|^2
  double eta4;  // |D4|^2
};

GramSummary gram_summary(const DeviceTransform& t);

struct TransformOutput {
  std::array<Complex, 2 * kMachineDim> joint;  // index = qubit * 4 + machine
  DensityOperator rho;
};

/// Joint qubit (x) machine state for input Psi, and the qubit marginal.
TransformOutput apply_transform(const DeviceTransform& t, const DickeVector& big_psi);

/// Fidelity of the output qubit with psi(theta, phi) from the closed-form
/// polynomial in the amplitudes and the Gram data.
double pointwise_fidelity(const DeviceTransform& t, double theta, double phi);

/// The same fidelity through apply_transform and fidelity_pure.
double direct_fidelity(const DeviceTransform& t, double theta, double phi);

/// gamma_N^2 = (N+1) / (2 (N+1 - sqrt N)).
double gamma_sq(int n);

/// The covariant family D1 = D4 = gamma|d1>, D2 = delta|d2>, D3 = delta|d3>
/// with delta = sqrt(1 - gamma^2), for an arbitrary gamma in [0, 1].
DeviceTransform covariant_transform(int n, double gamma);
DeviceTransform universal_disentangler(int n);

/// D1 = D4 = |d1>, D2 = D3 = 0.
DeviceTransform swap_disentangler(int n);

/// Sphere covering of `samples` points (Fibonacci lattice).
std::vector<PureQubit> sphere_points(int samples);

/// max - min of pointwise_fidelity over sphere_points(samples).
double covariance_spread(const DeviceTransform& t, int samples);

struct XiCoefficients {
  double xi1;
  double xi2;
  double xi3;
};

/// Polar integrals of cos^4, sin^4 and sin^2 cos^2 of theta/2 weighted by
/// sin(theta) / (N cos^2(theta/2) + sin^2(theta/2)) over [0, pi]; the N = 1
/// values are the limits 2/3, 2/3, 1/3.
XiCoefficients xi_coefficients(int n);

/// Same integrals by the polar quadrature rule.
XiCoefficients xi_quadrature(int n, const BlochQuadrature& q);

/// Average fidelity over the Bloch sphere from the Gram data and the xi
/// coefficients.
double device_avg_fidelity(const DeviceTransform& t);

/// Entangler mapping one qubit plus N-1 blanks into the Dicke sectors:
///   |0> -> |N;0>|E1> + |N;1>|E2>
///   |1> -> |N;0>|E3> + |N;1>|E4>
/// e[k] holds E_{k+1}; the images share storage layout with DeviceTransform.
struct Entangler {
  int n;
  std::array<MachineVector, 4> e;
};

Entangler universal_entangler(int n);
Entangler swap_entangler(int n);

struct EntanglerOutput {
  std::array<Complex, 2 * kMachineDim> joint;  // index = dicke sector * 4 + machine
  DensityOperator rho;                         // on span{|N;0>, |N;1>}
};

EntanglerOutput apply_entangler(const Entangler& ent, const PureQubit& psi);

/// Fidelity of the entangler output with the ideal symmetric state
/// Psi(theta_bar, phi).
double entangler_fidelity(const Entangler& ent, double theta, double phi);

/// Gram matrix of the images of the two orthonormal inputs; the identity for
/// an isometry. Works for both device kinds.
std::array<std::array<Complex, 2>, 2> image_gram(const std::array<MachineVector, 4>& v);

}  // namespace disentangle
