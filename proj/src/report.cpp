#include "disentangle/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <system_error>

#include "disentangle/devices.hpp"
#include "disentangle/errors.hpp"
#include "disentangle/measurement.hpp"
#include "disentangle/network.hpp"
#include "disentangle/optimize.hpp"
#include "disentangle/symmetric_core.hpp"

namespace disentangle {

FidelityRow fidelity_row(int n) {
  return {n, diluted_avg_fidelity(n), measurement_avg_fidelity(n), optimal_bound(n), gamma_sq(n), f_n(n)};
}

bool row_is_ordered(const FidelityRow& r) {
  for (double v : {r.f0_diluted, r.f1_measure, r.fmax_measure, r.f2_universal, r.f3_swap}) {
    if (!(v >= 0.5 && v <= 1.0)) return false;
  }
  if (r.n < 2) return true;
  return r.f1_measure < r.fmax_measure && r.fmax_measure < r.f2_universal && r.f2_universal < r.f3_swap;
}

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return {buf, end};
}

std::string format_row(const FidelityRow& r) {
  std::string line = std::to_string(r.n);
  for (double v : {r.f0_diluted, r.f1_measure, r.fmax_measure, r.f2_universal, r.f3_swap}) {
    line += ',';
    line += format_number(v);
  }
  return line;
}

void write_table(int n_min, int n_max, std::ostream& out) {
  if (n_min < 1 || n_min > n_max || n_max > kMaxTableN) {
    throw DomainError("table range must satisfy 1 <= n_min <= n_max <= 1000000");
  }
  const int count = n_max - n_min + 1;
  std::vector<std::string> lines(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) lines[static_cast<std::size_t>(i)] = format_row(fidelity_row(n_min + i));
  out << kTableHeader << '\n';
  for (const auto& line : lines) out << line << '\n';
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Suite {
 public:
  /// Passes when residual <= tolerance.
  void expect_below(std::string name, double tolerance, const std::function<double()>& residual) {
    run(std::move(name), tolerance, residual, [](double r, double tol) { return r <= tol; });
  }

  /// Passes when value > threshold.
  void expect_above(std::string name, double threshold, const std::function<double()>& value) {
    run(std::move(name), threshold, value, [](double v, double tol) { return v > tol; });
  }

  std::vector<CheckResult> take() && { return std::move(results_); }

 private:
  void run(std::string name, double tol, const std::function<double()>& f,
           bool (*accept)(double, double)) {
    try {
      const double r = f();
      results_.push_back({std::move(name), std::isfinite(r) && accept(r, tol), r, tol});
    } catch (const std::exception&) {
      results_.push_back({std::move(name), false, std::nan(""), tol});
    }
  }

  std::vector<CheckResult> results_;
};

double max_abs(std::initializer_list<double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

std::vector<PureQubit> random_qubits(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PureQubit> out;
  for (int i = 0; i < count; ++i) {
    const double theta = std::acos(std::clamp(1.0 - 2.0 * unit(rng), -1.0, 1.0));
    out.emplace_back(theta, std::fmod(kTwoPi * unit(rng), kTwoPi));
  }
  return out;
}

void closed_form_checks(Suite& s) {
  s.expect_below("endpoints N=1 exact", 0.0, [] {
    return max_abs({diluted_avg_fidelity(1) - 1.0, measurement_avg_fidelity(1) - 2.0 / 3.0,
                    optimal_bound(1) - 2.0 / 3.0, gamma_sq(1) - 1.0, f_n(1) - 1.0});
  });
  s.expect_below("endpoints N=1e6 -> 1/2", 2e-3, [] {
    const int n = 1'000'000;
    return max_abs({diluted_avg_fidelity(n) - 0.5, measurement_avg_fidelity(n) - 0.5, optimal_bound(n) - 0.5,
                    gamma_sq(n) - 0.5, f_n(n) - 0.5});
  });
  s.expect_above("ordering F1 < Fmax < gamma^2 < f_N, N=2..50 (min gap)", 1e-6, [] {
    double gap = 1.0;
    for (int n = 2; n <= 50; ++n) {
      const auto r = fidelity_row(n);
      gap = std::min({gap, r.fmax_measure - r.f1_measure, r.f2_universal - r.fmax_measure,
                      r.f3_swap - r.f2_universal});
    }
    return gap;
  });
}

void oracle_checks(Suite& s) {
  const BlochQuadrature q;
  const BlochQuadrature inner_rule(4, 4);  // exact for the quadratic estimator integrand
  for (int n : {2, 3, 5, 10, 25}) {
    const std::string tag = " N=" + std::to_string(n);
    s.expect_below("oracle F0" + tag, 1e-9, [&] {
      return std::abs(bloch_average([&](double t, double p) { return diluted_fidelity(t, p, n); }, q) -
                      diluted_avg_fidelity(n));
    });
    s.expect_below("oracle f_N" + tag, 1e-9, [&] {
      return std::abs(bloch_average(
                          [&](double t, double p) {
                            const PureQubit psi(t, p);
                            const DickeVector big = symmetric_state(psi, n);
                            return overlap_sq(psi, PureQubit::from_amplitudes(big.c0, big.c1));
                          },
                          q) -
                      f_n(n));
    });
    s.expect_below("oracle F1" + tag, 1e-9, [&] {
      return std::abs(bloch_average(
                          [&](double t, double p) {
                            const PureQubit psi(t, p);
                            return fidelity_pure(psi, averaged_estimator(symmetric_state(psi, n), inner_rule));
                          },
                          q) -
                      measurement_avg_fidelity(n));
    });
    s.expect_below("oracle Fmax" + tag, 1e-9, [&] {
      const double h0 = strategy_integral(0, kPi / 2, 0.0, kPi / 2, 0.0, n, q);
      const double h1 = strategy_integral(1, kPi / 2, kPi, kPi / 2, 0.0, n, q);
      return std::abs(h0 + h1 - optimal_bound(n));
    });
    s.expect_below("oracle xi" + tag, 1e-9, [&] {
      const auto a = xi_coefficients(n);
      const auto b = xi_quadrature(n, q);
      return max_abs({a.xi1 - b.xi1, a.xi2 - b.xi2, a.xi3 - b.xi3});
    });
    s.expect_below("oracle device average (universal, swap)" + tag, 1e-9, [&] {
      double worst = 0.0;
      for (const auto& t : {universal_disentangler(n), swap_disentangler(n)}) {
        const double quad = bloch_average([&](double th, double ph) { return pointwise_fidelity(t, th, ph); }, q);
        worst = std::max(worst, std::abs(quad - device_avg_fidelity(t)));
      }
      return worst;
    });
    s.expect_below("swap average equals f_N" + tag, 1e-12,
                   [&] { return std::abs(device_avg_fidelity(swap_disentangler(n)) - f_n(n)); });
  }
}

void device_checks(Suite& s, const VerifyOptions& opts) {
  for (int n : {2, 5, 10}) {
    const std::string tag = " N=" + std::to_string(n);
    s.expect_below("universal device fidelity = gamma_N^2" + tag, 1e-12, [&] {
      const auto t = covariant_transform(n, std::sqrt(gamma_sq(n)) + opts.gamma_perturbation);
      double worst = 0.0;
      for (const auto& p : sphere_points(200)) {
        worst = std::max(worst, std::abs(direct_fidelity(t, p.theta(), p.phi()) - gamma_sq(n)));
      }
      return worst;
    });
    s.expect_below("universal covariance spread" + tag, 1e-12,
                   [&] { return covariance_spread(universal_disentangler(n), 1000); });
  }
  s.expect_above("swap device state dependence N=2", 0.01, [] { return covariance_spread(swap_disentangler(2), 1000); });
  s.expect_below("orthonormal images of disentangler and entangler, N<=50", 1e-12, [] {
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
      for (const auto& v : {universal_disentangler(n).d, universal_entangler(n).e}) {
        const auto g = image_gram(v);
        worst = std::max({worst, std::abs(g[0][0] - 1.0), std::abs(g[1][1] - 1.0), std::abs(g[0][1])});
      }
    }
    return worst;
  });
}

void network_checks(Suite& s, const VerifyOptions& opts) {
  const int per_n = opts.level == VerifyLevel::kFull ? 100 : 20;
  std::mt19937_64 rng(opts.seed);
  double fid_err = 0.0;
  double prob_err = 0.0;
  bool ok = true;
  try {
    for (int n = 2; n <= 12; ++n) {
      for (const auto& psi : random_qubits(rng, per_n)) {
        const auto out = run_cascade(psi, n);
        fid_err = std::max(fid_err, std::abs(overlap_sq(post_selected_state(out, n), psi) - 1.0));
        prob_err = std::max(prob_err,
                            std::abs(decompose(out, psi, n).plus_weight() - success_probability(psi.theta(), n)));
      }
    }
  } catch (const std::exception&) {
    ok = false;
  }
  s.expect_below("post-selected fidelity = 1, N=2..12", 1e-12, [&] { return ok ? fid_err : std::nan(""); });
  s.expect_below("v+ weight = success probability, N=2..12", 1e-12, [&] { return ok ? prob_err : std::nan(""); });
  s.expect_below("shot sampling theta=0 N=4 (z-score)", 3.0, [&] {
    const std::uint64_t shots = 100'000;
    const auto counts = sample_shots(PureQubit::zero(), 4, shots, opts.seed);
    const double p = 0.25;
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
    return std::abs(static_cast<double>(counts.plus) / static_cast<double>(shots) - p) / se;
  });
}

void optimizer_checks(Suite& s, const VerifyOptions& opts) {
  const bool full = opts.level == VerifyLevel::kFull;
  const std::vector<int> sizes = full ? std::vector<int>{2, 3, 5, 10} : std::vector<int>{2};
  const int seeds = full ? 20 : 1;
  for (int n : sizes) {
    const std::string tag = " N=" + std::to_string(n);
    double best_avg = 0.0;
    double best_uni = 0.0;
    double worst_gap_avg = 1.0;
    double worst_gap_uni = 1.0;
    bool ok = true;
    try {
      for (int k = 0; k < seeds; ++k) {
        const double a = optimize_average(n, 8, opts.seed + static_cast<std::uint64_t>(k)).value;
        const double u = optimize_universal(n, 8, opts.seed + static_cast<std::uint64_t>(k)).value;
        best_avg = std::max(best_avg, a);
        best_uni = std::max(best_uni, u);
        worst_gap_avg = std::min(worst_gap_avg, a);
        worst_gap_uni = std::min(worst_gap_uni, u);
      }
    } catch (const std::exception&) {
      ok = false;
    }
    const double fn = f_n(n);
    const double g2 = gamma_sq(n);
    s.expect_below("optimize_average attains f_N" + tag, 1e-6,
                   [&] { return ok ? std::max(std::abs(worst_gap_avg - fn), std::abs(best_avg - fn)) : std::nan(""); });
    s.expect_below("optimize_universal attains gamma_N^2" + tag, 1e-6,
                   [&] { return ok ? std::max(std::abs(worst_gap_uni - g2), std::abs(best_uni - g2)) : std::nan(""); });
  }
  if (full) {
    for (int n : {1, 2, 3, 5, 8}) {
      s.expect_below("numeric measurement bound N=" + std::to_string(n), 2e-3,
                     [&] { return std::abs(optimal_bound_numeric(n, 32) - optimal_bound(n)); });
    }
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Suite s;
  closed_form_checks(s);
  oracle_checks(s);
  device_checks(s, opts);
  network_checks(s, opts);
  optimizer_checks(s, opts);
  return std::move(s).take();
}

void print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual=" << std::setprecision(3) << std::scientific
        << c.residual << " tol=" << c.tolerance << std::defaultfloat << '\n';
  }
}

}  // namespace disentangle
