#pragma once

#include <array>

#include "disentangle/quadrature.hpp"
#include "disentangle/states.hpp"

namespace disentangle {

/// Two orthogonal projectors on span{|N;0>, |N;1>} oriented along
/// (theta_p, phi_p):
///   xi0 = cos(theta_p/2)|N;0> + e^{i phi_p} sin(theta_p/2)|N;1>
///   xi1 = e^{-i phi_p} sin(theta_p/2)|N;0> - cos(theta_p/2)|N;1>
struct ProjectorPair {
  double theta_p;
  double phi_p;
  int n;
  DickeVector xi0;
  DickeVector xi1;
};

ProjectorPair projector_pair(double theta_p, double phi_p, int n);

/// Outcome j of the measurement and the qubit prepared for it.
struct EstimateRecord {
  int outcome;
  double probability;
  PureQubit eta;
};

/// Prepared state for outcome 0 (eta_0 points along the apparatus) and 1
/// (the orthogonal state).
PureQubit prepared_state(int outcome, double theta_p, double phi_p);

std::array<EstimateRecord, 2> measure(const DickeVector& big_psi, const ProjectorPair& pair);

/// sum_j |<Psi|Xi_j>|^2 |eta_j><eta_j|.
DensityOperator estimator_output(const DickeVector& big_psi, const ProjectorPair& pair);

/// estimator_output averaged over apparatus orientations by quadrature.
/// Throws ContractViolation if the result departs from the closed form
/// (1/3)|psi_bar><psi_bar| + (1/3) I by more than 1e-8 when the rule is exact
/// for it (n_phi >= 3).
DensityOperator averaged_estimator(const DickeVector& big_psi, const BlochQuadrature& q);

/// (1/3)|psi_bar><psi_bar| + (1/3) I.
DensityOperator averaged_estimator_closed_form(const DickeVector& big_psi);

/// Average fidelity of the state-swap output, also the mean overlap
/// |<psi|psi_bar>|^2: limit 1 at N = 1.
double f_n(int n);

/// |<psi(theta, phi)|psi(theta_bar, phi)>|^2, the integrand of f_n.
double swap_overlap(double theta, int n);

/// (1 + f_N) / 3.
double measurement_avg_fidelity(int n);

/// Integral over the input ensemble of |<Psi|Xi_j(theta_p, phi_p)>|^2
/// |<psi|eta(theta_pp, phi_pp)>|^2.
double strategy_integral(int j, double theta_pp, double phi_pp, double theta_p, double phi_p, int n,
                         const BlochQuadrature& q);

/// 1/2 [1 + sqrt(N) (N^2 - 1 - 2 N ln N) / (N-1)^3]; limit 2/3 at N = 1.
double optimal_bound(int n);

struct BoundSearch {
  double value;
  double theta_p;  // maximizing apparatus polar angle (phi_p fixed at 0)
  double h0;
  double h1;
};

/// Nested supremum sup_{theta_p} [h0 + h1] with h_j = sup_{eta} f_j, by grid
/// of `resolution` points plus golden-section refinement at both levels.
/// phi_p is fixed to 0 and eta is searched on the great circle through the
/// apparatus axis and the poles.
BoundSearch optimal_bound_search(int n, int resolution, const BlochQuadrature& q);
double optimal_bound_numeric(int n, int resolution);

/// h_j(theta_p, phi_p) by a full two-angle grid search over eta; used to
/// check the great-circle reduction.
double strategy_sup_full(int j, double theta_p, double phi_p, int n, int resolution,
                         const BlochQuadrature& q);
/// h_j on the great circle through the apparatus azimuth.
double strategy_sup(int j, double theta_p, double phi_p, int n, int resolution,
                    const BlochQuadrature& q);

}  // namespace disentangle
