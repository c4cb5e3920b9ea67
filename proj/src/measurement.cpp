#include "disentangle/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "disentangle/errors.hpp"
#include "disentangle/kernels.hpp"
#include "disentangle/symmetric_core.hpp"

namespace disentangle {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;  // 1 / golden ratio

void require_qubit_count(int n) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
}

Eigen::Matrix2cd projector(Complex a0, Complex a1) {
  Eigen::Vector2cd v(a0, a1);
  return v * v.adjoint();
}

/// Golden-section maximization of a unimodal f on [lo, hi].
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol = 1e-12) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

/// Grid of `count` points from lo with spacing step, then golden refinement
/// around the best point. Grid values are evaluated in parallel and merged by
/// maximum with lowest-index tie-break.
template <class F>
std::pair<double, double> grid_then_golden(F&& f, double lo, double step, int count, bool parallel) {
  std::vector<double> values(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < count; ++k) values[static_cast<std::size_t>(k)] = f(lo + k * step);
  const auto best = static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
  const double centre = lo + best * step;
  auto refined = golden_max(f, centre - step, centre + step);
  if (refined.second < values[static_cast<std::size_t>(best)]) {
    return {centre, values[static_cast<std::size_t>(best)]};
  }
  return refined;
}

/// Input-ensemble nodes with the qubit and diluted-state amplitudes cached.
class Ensemble {
 public:
  Ensemble(int n, const BlochQuadrature& q) {
    for (const auto& node : q.nodes()) {
      const PureQubit psi(node.theta, node.phi);
      const DickeVector big = symmetric_state(psi, n);
      points_.push_back({node.weight, psi.alpha(), psi.beta(), big.c0, big.c1});
    }
  }

  /// Integral of |<Psi|xi>|^2 |<psi|eta>|^2.
  double integral(Complex xi0, Complex xi1, Complex eta0, Complex eta1) const {
    double acc = 0.0;
    for (const auto& p : points_) {
      const double pm = std::norm(std::conj(p.c0) * xi0 + std::conj(p.c1) * xi1);
      const double ov = std::norm(std::conj(p.alpha) * eta0 + std::conj(p.beta) * eta1);
      acc += p.weight * pm * ov;
    }
    return acc;
  }

 private:
  struct Point {
    double weight;
    Complex alpha, beta, c0, c1;
  };
  std::vector<Point> points_;
};

std::pair<Complex, Complex> xi_amplitudes(int j, double theta_p, double phi_p) {
  const double c = std::cos(0.5 * theta_p);
  const double s = std::sin(0.5 * theta_p);
  if (j == 0) return {c, std::polar(s, phi_p)};
  return {std::polar(s, -phi_p), -c};
}

double sup_on_circle(const Ensemble& ens, int j, double theta_p, double phi_p, int resolution,
                     bool parallel) {
  const auto [x0, x1] = xi_amplitudes(j, theta_p, phi_p);
  const Complex phase = std::polar(1.0, phi_p);
  // t in [0, 2 pi) sweeps the great circle through the poles and the
  // apparatus azimuth.
  auto f = [&](double t) { return ens.integral(x0, x1, std::cos(0.5 * t), phase * std::sin(0.5 * t)); };
  return grid_then_golden(f, 0.0, kTwoPi / resolution, resolution, parallel).second;
}

void require_outcome(int j) {
  if (j != 0 && j != 1) throw DomainError("measurement outcome must be 0 or 1");
}

}  // namespace

ProjectorPair projector_pair(double theta_p, double phi_p, int n) {
  const PureQubit axis(theta_p, phi_p);  // validates the angles
  const double c = std::cos(0.5 * theta_p);
  const double s = std::sin(0.5 * theta_p);
  return {theta_p, phi_p, n, DickeVector(n, c, std::polar(s, phi_p)),
          DickeVector(n, std::polar(s, -phi_p), -c)};
}

PureQubit prepared_state(int outcome, double theta_p, double phi_p) {
  require_outcome(outcome);
  const PureQubit eta0(theta_p, phi_p);
  return outcome == 0 ? eta0 : eta0.orthogonal();
}

std::array<EstimateRecord, 2> measure(const DickeVector& big_psi, const ProjectorPair& pair) {
  if (big_psi.n != pair.n) throw DimensionMismatch("projector and state qubit counts differ");
  const double p0 = std::norm(inner(big_psi, pair.xi0));
  const double p1 = std::norm(inner(big_psi, pair.xi1));
  return {EstimateRecord{0, p0, prepared_state(0, pair.theta_p, pair.phi_p)},
          EstimateRecord{1, p1, prepared_state(1, pair.theta_p, pair.phi_p)}};
}

DensityOperator estimator_output(const DickeVector& big_psi, const ProjectorPair& pair) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (const auto& rec : measure(big_psi, pair)) {
    rho += rec.probability * projector(rec.eta.alpha(), rec.eta.beta());
  }
  return DensityOperator(rho);
}

DensityOperator averaged_estimator_closed_form(const DickeVector& big_psi) {
  Eigen::Matrix2cd rho = projector(big_psi.c0, big_psi.c1) / 3.0;
  rho += Eigen::Matrix2cd::Identity() / 3.0;
  return DensityOperator(rho);
}

DensityOperator averaged_estimator(const DickeVector& big_psi, const BlochQuadrature& q) {
  const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  const Eigen::Matrix2cd avg = kernels::omp::weighted_sum(
      q.nodes(),
      [&](double theta_p, double phi_p) -> Eigen::Matrix2cd {
        // Raw matrix sum; the DensityOperator check is done once on the total.
        const Complex x0 = std::cos(0.5 * theta_p);
        const Complex x1 = std::polar(std::sin(0.5 * theta_p), phi_p);
        const double p0 = std::norm(std::conj(big_psi.c0) * x0 + std::conj(big_psi.c1) * x1);
        const Eigen::Matrix2cd eta0 = projector(x0, x1);
        return p0 * eta0 + (1.0 - p0) * (Eigen::Matrix2cd::Identity() - eta0);
      },
      zero);
  DensityOperator rho(avg);
  if (q.n_phi() >= 3) {
    const auto expected = averaged_estimator_closed_form(big_psi);
    const double dev = (rho.matrix() - expected.matrix()).cwiseAbs().maxCoeff();
    if (dev > 1e-8) throw ContractViolation("averaged estimator departs from closed form");
  }
  return rho;
}

double f_n(int n) {
  require_qubit_count(n);
  if (n == 1) return 1.0;
  const double nn = n;
  const double r = std::sqrt(nn);
  return (nn * nn + 4.0 * nn * r - 4.0 * r - 1.0 + 2.0 * nn * std::log(nn)) /
         (2.0 * (nn - 1.0) * (r + 1.0) * (r + 1.0));
}

double swap_overlap(double theta, int n) {
  const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
  const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const double num = std::sqrt(static_cast<double>(n)) * c2 + s2;
  return num * num / (n * c2 + s2);
}

double measurement_avg_fidelity(int n) { return (1.0 + f_n(n)) / 3.0; }

double strategy_integral(int j, double theta_pp, double phi_pp, double theta_p, double phi_p, int n,
                         const BlochQuadrature& q) {
  require_outcome(j);
  require_qubit_count(n);
  const auto pair = projector_pair(theta_p, phi_p, n);
  const DickeVector& xi = j == 0 ? pair.xi0 : pair.xi1;
  const PureQubit eta(theta_pp, phi_pp);
  return bloch_average(
      [&](double theta, double phi) {
        const PureQubit psi(theta, phi);
        const DickeVector big = symmetric_state(psi, n);
        return std::norm(inner(big, xi)) * overlap_sq(psi, eta);
      },
      q);
}

double optimal_bound(int n) {
  require_qubit_count(n);
  if (n == 1) return 2.0 / 3.0;
  const double nn = n;
  const double d = nn - 1.0;
  return 0.5 * (1.0 + std::sqrt(nn) * (nn * nn - 1.0 - 2.0 * nn * std::log(nn)) / (d * d * d));
}

double strategy_sup(int j, double theta_p, double phi_p, int n, int resolution, const BlochQuadrature& q) {
  require_outcome(j);
  const Ensemble ens(n, q);
  return sup_on_circle(ens, j, theta_p, phi_p, resolution, true);
}

double strategy_sup_full(int j, double theta_p, double phi_p, int n, int resolution,
                         const BlochQuadrature& q) {
  require_outcome(j);
  const Ensemble ens(n, q);
  const auto [x0, x1] = xi_amplitudes(j, theta_p, phi_p);
  auto f = [&](double tpp, double ppp) {
    return ens.integral(x0, x1, std::cos(0.5 * tpp), std::polar(std::sin(0.5 * tpp), ppp));
  };
  const int nt = resolution + 1;
  std::vector<double> values(static_cast<std::size_t>(nt * resolution));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < nt * resolution; ++k) {
    values[static_cast<std::size_t>(k)] = f(kPi * (k / resolution) / resolution,
                                             kTwoPi * (k % resolution) / resolution);
  }
  const auto best = static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
  double tpp = kPi * (best / resolution) / resolution;
  double ppp = kTwoPi * (best % resolution) / resolution;
  double value = values[static_cast<std::size_t>(best)];
  const double dt = kPi / resolution;
  const double dp = kTwoPi / resolution;
  for (int round = 0; round < 8; ++round) {
    auto [t, ft] = golden_max([&](double x) { return f(std::clamp(x, 0.0, kPi), ppp); },
                              tpp - dt, tpp + dt);
    if (ft > value) {
      tpp = std::clamp(t, 0.0, kPi);
      value = ft;
    }
    auto [p, fp] = golden_max([&](double x) { return f(tpp, x); }, ppp - dp, ppp + dp);
    if (fp > value) {
      ppp = p;
      value = fp;
    }
  }
  return value;
}

BoundSearch optimal_bound_search(int n, int resolution, const BlochQuadrature& q) {
  require_qubit_count(n);
  if (resolution < 32) throw DomainError("bound search resolution must be >= 32");
  const Ensemble ens(n, q);
  auto total = [&](double theta_p) {
    const double t = std::clamp(theta_p, 0.0, kPi);
    return sup_on_circle(ens, 0, t, 0.0, resolution, false) + sup_on_circle(ens, 1, t, 0.0, resolution, false);
  };
  const auto [theta_best, value] = grid_then_golden(total, 0.0, kPi / resolution, resolution + 1, true);
  const double t = std::clamp(theta_best, 0.0, kPi);
  return {value, t, sup_on_circle(ens, 0, t, 0.0, resolution, false),
          sup_on_circle(ens, 1, t, 0.0, resolution, false)};
}

double optimal_bound_numeric(int n, int resolution) {
  const BlochQuadrature q;
  return optimal_bound_search(n, resolution, q).value;
}

}  // namespace disentangle
