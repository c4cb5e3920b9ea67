#include "disentangle/devices.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "disentangle/errors.hpp"
#include "disentangle/symmetric_core.hpp"

namespace disentangle {
namespace {

void require_qubit_count(int n) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
}

void require_unitary(const DeviceTransform& t) {
  const double r = unitarity_residuals(t).max();
  if (r >= 1e-8) throw ContractViolation("device transform is not unitary (residual " + std::to_string(r) + ")");
}

MachineVector basis_vector(int k, Complex scale) {
  MachineVector v{};
  v[static_cast<std::size_t>(k)] = scale;
  return v;
}

/// Routes input amplitudes (a0, a1) through images v: qubit/sector 0 gets
/// a0 v[0] + a1 v[2], sector 1 gets a0 v[1] + a1 v[3].
std::array<Complex, 2 * kMachineDim> route(const std::array<MachineVector, 4>& v, Complex a0, Complex a1) {
  std::array<Complex, 2 * kMachineDim> joint{};
  for (int m = 0; m < kMachineDim; ++m) {
    const auto mi = static_cast<std::size_t>(m);
    joint[mi] = a0 * v[0][mi] + a1 * v[2][mi];
    joint[kMachineDim + mi] = a0 * v[1][mi] + a1 * v[3][mi];
  }
  return joint;
}

DensityOperator trace_machine(const std::array<Complex, 2 * kMachineDim>& joint) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int m = 0; m < kMachineDim; ++m) {
        rho(i, j) += joint[static_cast<std::size_t>(i * kMachineDim + m)] *
                     std::conj(joint[static_cast<std::size_t>(j * kMachineDim + m)]);
      }
    }
  }
  return DensityOperator(rho);
}

double expectation(const DensityOperator& rho, Complex t0, Complex t1) {
  const std::array<Complex, 2> t{t0, t1};
  Complex f{0.0, 0.0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) f += std::conj(t[static_cast<std::size_t>(i)]) * rho(i, j) * t[static_cast<std::size_t>(j)];
  }
  return f.real();
}

/// The gamma/delta vectors shared by the universal disentangler and
/// entangler.
std::array<MachineVector, 4> covariant_vectors(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in [0, 1]");
  const double delta = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
  return {basis_vector(0, gamma), basis_vector(1, delta), basis_vector(2, delta), basis_vector(0, gamma)};
}

std::array<MachineVector, 4> swap_vectors() {
  return {basis_vector(0, 1.0), MachineVector{}, MachineVector{}, basis_vector(0, 1.0)};
}

}  // namespace

Complex inner(const MachineVector& a, const MachineVector& b) {
  Complex s{0.0, 0.0};
  for (std::size_t m = 0; m < a.size(); ++m) s += std::conj(a[m]) * b[m];
  return s;
}

double norm_sq(const MachineVector& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

double UnitarityResiduals::max() const { return std::max({first, second, cross}); }

UnitarityResiduals unitarity_residuals(const DeviceTransform& t) {
  const auto& d = t.d;
  return {std::abs(norm_sq(d[0]) + norm_sq(d[1]) - 1.0), std::abs(norm_sq(d[2]) + norm_sq(d[3]) - 1.0),
          std::abs(inner(d[0], d[2]) + inner(d[1], d[3]))};
}

double covariance_residual(const DeviceTransform& t) {
  const auto& d = t.d;
  const double n = t.n;
  const double rn = std::sqrt(n);
  const double r1 = std::abs(rn * inner(d[0], d[2]) + n * inner(d[1], d[0]));
  const double r2 = std::abs(inner(d[2], d[1]));
  const double r3 = std::abs(rn * inner(d[1], d[3]) + n * inner(d[3], d[2]));
  const double r4 = std::abs(norm_sq(d[0]) - norm_sq(d[3]));
  const double r5 = std::abs((n + 1.0) * norm_sq(d[3]) - norm_sq(d[2]) - n * norm_sq(d[1]) -
                             2.0 * rn * inner(d[3], d[0]).real());
  return std::max({r1, r2, r3, r4, r5});
}

GramSummary gram_summary(const DeviceTransform& t) {
  GramSummary g{};
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      g.gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          inner(t.d[static_cast<std::size_t>(j)], t.d[static_cast<std::size_t>(k)]);
    }
    g.norms_sq[static_cast<std::size_t>(j)] = g.gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)].real();
  }
  g.eta1 = g.norms_sq[0];
  g.eta4 = g.norms_sq[3];
  const double re14 = g.gram[3][0].real();
  g.x = g.eta4 > 0.0 ? re14 / g.eta4 : 0.0;
  const double scale = std::sqrt(g.eta1 * g.eta4);
  g.u = scale > 0.0 ? re14 / scale : 0.0;
  return g;
}

TransformOutput apply_transform(const DeviceTransform& t, const DickeVector& big_psi) {
  if (t.n != big_psi.n) throw DimensionMismatch("transform and state qubit counts differ");
  require_unitary(t);
  const auto joint = route(t.d, big_psi.c0, big_psi.c1);
  return {joint, trace_machine(joint)};
}

double pointwise_fidelity(const DeviceTransform& t, double theta, double phi) {
  require_unitary(t);
  const PureQubit psi(theta, phi);
  const Complex a = psi.alpha();
  const Complex b = psi.beta();
  const auto g = gram_summary(t).gram;
  // g[j][k] = <D_{j+1}|D_{k+1}>
  const double n = t.n;
  const double rn = std::sqrt(n);
  const double a2 = std::norm(a);
  const double b2 = std::norm(b);
  const Complex ab = std::conj(a) * b;  // alpha* beta
  const Complex ba = a * std::conj(b);  // alpha beta*
  Complex f = n * a2 * a2 * g[0][0] + b2 * b2 * g[3][3];
  f += a2 * b2 * (g[2][2] + n * g[1][1] + rn * (g[3][0] + g[0][3]));
  f += ab * a2 * (rn * g[0][2] + n * g[1][0]);
  f += ba * a2 * (rn * g[2][0] + n * g[0][1]);
  f += ab * b2 * (rn * g[1][3] + g[3][2]);
  f += ba * b2 * (rn * g[3][1] + g[2][3]);
  f += ab * ab * rn * g[1][2];
  f += ba * ba * rn * g[2][1];
  return f.real() / (n * a2 + b2);
}

double direct_fidelity(const DeviceTransform& t, double theta, double phi) {
  const PureQubit psi(theta, phi);
  return fidelity_pure(psi, apply_transform(t, symmetric_state(psi, t.n)).rho);
}

double gamma_sq(int n) {
  require_qubit_count(n);
  const double nn = n;
  return (nn + 1.0) / (2.0 * (nn + 1.0 - std::sqrt(nn)));
}

DeviceTransform covariant_transform(int n, double gamma) {
  require_qubit_count(n);
  return {n, covariant_vectors(gamma)};
}

DeviceTransform universal_disentangler(int n) { return covariant_transform(n, std::sqrt(gamma_sq(n))); }

DeviceTransform swap_disentangler(int n) {
  require_qubit_count(n);
  return {n, swap_vectors()};
}

std::vector<PureQubit> sphere_points(int samples) {
  if (samples < 1) throw DomainError("need at least one sample");
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<PureQubit> points;
  points.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / samples;
    const double phi = std::fmod(golden_angle * i, 2.0 * std::numbers::pi);
    points.emplace_back(std::acos(std::clamp(z, -1.0, 1.0)), phi);
  }
  return points;
}

double covariance_spread(const DeviceTransform& t, int samples) {
  if (samples < 100) throw DomainError("covariance_spread needs >= 100 samples");
  double lo = 1.0;
  double hi = 0.0;
  for (const auto& p : sphere_points(samples)) {
    const double f = pointwise_fidelity(t, p.theta(), p.phi());
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return hi - lo;
}

XiCoefficients xi_coefficients(int n) {
  require_qubit_count(n);
  if (n == 1) return {2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0};
  const double nn = n;
  const double d3 = (nn - 1.0) * (nn - 1.0) * (nn - 1.0);
  const double ln = std::log(nn);
  return {(3.0 - 4.0 * nn + nn * nn + 2.0 * ln) / d3, (-1.0 + 4.0 * nn - 3.0 * nn * nn + 2.0 * nn * nn * ln) / d3,
          (-1.0 + nn * nn - 2.0 * nn * ln) / d3};
}

XiCoefficients xi_quadrature(int n, const BlochQuadrature& q) {
  require_qubit_count(n);
  // The polar rule integrates against sin(theta) dtheta / 2, hence the 2.
  auto weighted = [&](auto&& g) {
    return 2.0 * polar_average(
                     [&](double theta) {
                       const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
                       const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
                       return g(c2, s2) / (n * c2 + s2);
                     },
                     q);
  };
  return {weighted([](double c2, double) { return c2 * c2; }), weighted([](double, double s2) { return s2 * s2; }),
          weighted([](double c2, double s2) { return c2 * s2; })};
}

double device_avg_fidelity(const DeviceTransform& t) {
  require_unitary(t);
  const auto xi = xi_coefficients(t.n);
  const auto g = gram_summary(t);
  const double n = t.n;
  return 0.5 * (xi.xi1 * n * g.norms_sq[0] + xi.xi2 * g.norms_sq[3] +
                xi.xi3 * (g.norms_sq[2] + n * g.norms_sq[1] + 2.0 * std::sqrt(n) * g.gram[0][3].real()));
}

Entangler universal_entangler(int n) { return {n, covariant_vectors(std::sqrt(gamma_sq(n)))}; }

Entangler swap_entangler(int n) {
  require_qubit_count(n);
  return {n, swap_vectors()};
}

EntanglerOutput apply_entangler(const Entangler& ent, const PureQubit& psi) {
  const auto gram = image_gram(ent.e);
  const double dev = std::max({std::abs(gram[0][0] - 1.0), std::abs(gram[1][1] - 1.0), std::abs(gram[0][1])});
  if (dev >= 1e-8) throw ContractViolation("entangler is not an isometry");
  const auto joint = route(ent.e, psi.alpha(), psi.beta());
  return {joint, trace_machine(joint)};
}

double entangler_fidelity(const Entangler& ent, double theta, double phi) {
  const PureQubit psi(theta, phi);
  const DickeVector target = symmetric_state(psi, ent.n);
  return expectation(apply_entangler(ent, psi).rho, target.c0, target.c1);
}

std::array<std::array<Complex, 2>, 2> image_gram(const std::array<MachineVector, 4>& v) {
  const Complex g01 = inner(v[0], v[2]) + inner(v[1], v[3]);
  return {{{norm_sq(v[0]) + norm_sq(v[1]), g01}, {std::conj(g01), norm_sq(v[2]) + norm_sq(v[3])}}};
}

}  // namespace disentangle
