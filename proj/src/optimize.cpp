#include "disentangle/optimize.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "disentangle/errors.hpp"

namespace disentangle {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;

template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol) {
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

MachineVector vec(Complex c1, Complex c2, Complex c3, Complex c4) { return {c1, c2, c3, c4}; }

template <class Family>
DeviceOptimum random_restarts(int n, int restarts, std::uint64_t seed, int dims, Family&& family) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  if (restarts < 8) throw DomainError("optimizer needs >= 8 restarts, got " + std::to_string(restarts));
  auto objective = [&](const std::vector<double>& p) { return device_avg_fidelity(family(n, p)); };
  std::vector<AscentResult> results(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::vector<double> x0(static_cast<std::size_t>(dims));
    for (auto& x : x0) x = kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    results[static_cast<std::size_t>(r)] = coordinate_ascent(objective, std::move(x0));
  }
  int best = 0;
  for (int r = 1; r < restarts; ++r) {
    if (results[static_cast<std::size_t>(r)].value > results[static_cast<std::size_t>(best)].value) best = r;
  }
  auto& winner = results[static_cast<std::size_t>(best)];
  return {family(n, winner.x), winner.value, best, winner.x};
}

}  // namespace

AscentResult coordinate_ascent(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> x0, const CoordinateAscentOptions& opts) {
  std::vector<double> x = std::move(x0);
  double value = f(x);
  const double step = kTwoPi / opts.grid;
  int sweep = 0;
  for (; sweep < opts.max_sweeps; ++sweep) {
    const double start = value;
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::vector<double> trial = x;
      auto line = [&](double t) {
        trial[i] = t;
        return f(trial);
      };
      const double origin = x[i];
      double best_t = origin;
      double best_v = value;
      for (int k = 1; k < opts.grid; ++k) {
        const double t = origin + k * step;
        const double v = line(t);
        if (v > best_v) {
          best_v = v;
          best_t = t;
        }
      }
      auto [t, v] = golden_max(line, best_t - step, best_t + step, 1e-12);
      if (v > best_v) {
        best_v = v;
        best_t = t;
      }
      if (best_v > value) {
        x[i] = std::remainder(best_t, kTwoPi);
        value = best_v;
      }
    }
    if (value - start < opts.tolerance) break;
  }
  return {std::move(x), value, sweep + 1};
}

DeviceTransform average_family(int n, const std::vector<double>& p) {
  if (p.size() != 5) throw DimensionMismatch("average_family takes 5 parameters");
  const double s1 = std::sin(p[0]);
  const double c1 = std::cos(p[0]);
  const double s4 = std::sin(p[2]);
  const double c4 = std::cos(p[2]);
  DeviceTransform t{n, {}};
  t.d[0] = vec(s1, 0.0, 0.0, 0.0);
  t.d[1] = vec(0.0, 0.0, c1, 0.0);
  t.d[2] = vec(0.0, 0.0, c4 * std::sin(p[4]), c4 * std::cos(p[4]));
  t.d[3] = vec(s4 * std::polar(std::cos(p[1]), p[3]), s4 * std::sin(p[1]), 0.0, 0.0);
  return t;
}

DeviceTransform covariant_family(int n, const std::vector<double>& p) {
  if (p.size() != 4) throw DimensionMismatch("covariant_family takes 4 parameters");
  const double nn = n;
  const double x = std::cos(p[0]) * std::cos(p[1]);
  const double eta4 = (nn + 1.0) / (2.0 * (nn + 1.0 - std::sqrt(nn) * x));
  if (!(eta4 >= 0.0 && eta4 <= 1.0)) {
    throw OptimizationFailure("covariance constraints infeasible: |D4|^2 = " + std::to_string(eta4));
  }
  const double a = std::sqrt(eta4);
  const double b = std::sqrt(1.0 - eta4);
  const double cw = std::cos(p[2]);
  const double sw = std::sin(p[2]);
  const Complex ph = std::polar(1.0, p[3]);
  DeviceTransform t{n, {}};
  t.d[0] = vec(a, 0.0, 0.0, 0.0);
  t.d[1] = vec(0.0, 0.0, b * cw, b * sw * ph);
  t.d[2] = vec(0.0, 0.0, -b * sw * std::conj(ph), b * cw);
  t.d[3] = vec(a * std::polar(std::cos(p[0]), p[1]), a * std::sin(p[0]), 0.0, 0.0);
  return t;
}

DeviceOptimum optimize_average(int n, int restarts, std::uint64_t seed) {
  return random_restarts(n, restarts, seed, 5, average_family);
}

DeviceOptimum optimize_universal(int n, int restarts, std::uint64_t seed) {
  auto best = random_restarts(n, restarts, seed, 4, covariant_family);
  const double residual = covariance_residual(best.transform);
  if (residual > 1e-10) {
    throw OptimizationFailure("optimum violates covariance conditions (residual " + std::to_string(residual) + ")");
  }
  return best;
}

}  // namespace disentangle
