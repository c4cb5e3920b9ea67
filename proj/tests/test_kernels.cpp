#include <doctest.h>

#include <cmath>
#include <random>

#include "disentangle/kernels.hpp"
#include "disentangle/quadrature.hpp"
#include "oracles.hpp"

using namespace disentangle;

namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("omp weighted sum matches serial") {
  const BlochQuadrature q(48, 40);
  auto f = [](double t, double p) { return std::exp(std::cos(t)) * (1.0 + 0.3 * std::sin(2 * p)); };
  const double s = kernels::serial::weighted_sum(q.nodes(), f, 0.0);
  const double o = kernels::omp::weighted_sum(q.nodes(), f, 0.0);
  CHECK(std::abs(s - o) < 1e-13);

  auto g = [](double t, double p) { return Complex{std::cos(t), std::sin(p)}; };
  const Complex sc = kernels::serial::weighted_sum(q.nodes(), g, Complex{});
  const Complex oc = kernels::omp::weighted_sum(q.nodes(), g, Complex{});
  CHECK(std::abs(sc - oc) < 1e-13);
}

TEST_CASE("omp partial trace matches serial and the reshaping oracle") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 10; ++n) {
    const auto amps = oracle::random_state(rng, n);
    for (int which = 1; which <= n; ++which) {
      const auto s = kernels::serial::partial_trace_qubit(amps, n, which);
      const auto o = kernels::omp::partial_trace_qubit(amps, n, which);
      CHECK(std::abs(s.p0 - o.p0) < 1e-13);
      CHECK(std::abs(s.p1 - o.p1) < 1e-13);
      CHECK(std::abs(s.coherence - o.coherence) < 1e-13);
      const auto ref = oracle::brute_reduced(amps, n, which);
      CHECK(std::abs(ref(0, 0).real() - s.p0) < 1e-13);
      CHECK(std::abs(ref(1, 1).real() - s.p1) < 1e-13);
      CHECK(std::abs(ref(0, 1) - s.coherence) < 1e-13);
    }
  }
}

TEST_CASE("omp cnot matches serial") {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 12; ++n) {
    const auto amps = oracle::random_state(rng, n);
    for (int c = 1; c <= n; ++c) {
      for (int t = 1; t <= n; ++t) {
        if (c == t) continue;
        auto a = amps;
        auto b = amps;
        kernels::serial::apply_cnot(a, n, c, t);
        kernels::omp::apply_cnot(b, n, c, t);
        CHECK(max_diff(a, b) == 0.0);
      }
    }
  }
}

TEST_CASE("cnot permutes basis states as expected") {
  // |10> -> |11> with control 1, target 2 (qubit 1 is the high bit)
  std::vector<Complex> v(4);
  v[2] = 1.0;
  kernels::serial::apply_cnot(v, 2, 1, 2);
  CHECK(std::abs(v[3] - Complex{1.0}) == 0.0);
  kernels::omp::apply_cnot(v, 2, 2, 1);
  CHECK(std::abs(v[1] - Complex{1.0}) == 0.0);
}
