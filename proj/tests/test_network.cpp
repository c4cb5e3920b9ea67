#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "disentangle/errors.hpp"
#include "disentangle/network.hpp"
#include "disentangle/symmetric_core.hpp"
#include "oracles.hpp"

using namespace disentangle;
using std::numbers::pi;

namespace {

double distance(const FullStateVector& a, const FullStateVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("cnot on basis states") {
  // |110> with control 2 target 3 -> |111>
  const auto out = apply_cnot(FullStateVector::basis(3, 0b110), 2, 3);
  CHECK(out[0b111] == Complex{1.0});
  // control clear: no change
  const auto same = apply_cnot(FullStateVector::basis(3, 0b010), 1, 3);
  CHECK(same[0b010] == Complex{1.0});
}

TEST_CASE("cnot is an involution") {
  std::mt19937_64 rng(51);
  for (int n = 2; n <= 9; ++n) {
    const FullStateVector s(n, oracle::random_state(rng, n));
    for (int c = 1; c <= n; ++c) {
      for (int t = 1; t <= n; ++t) {
        if (c != t) CHECK(distance(apply_cnot(apply_cnot(s, c, t), c, t), s) < 1e-15);
      }
    }
  }
}

TEST_CASE("cnot contracts") {
  const auto s = FullStateVector::basis(3, 0);
  CHECK_THROWS_AS(apply_cnot(s, 0, 2), DomainError);
  CHECK_THROWS_AS(apply_cnot(s, 1, 4), DomainError);
  CHECK_THROWS_AS(apply_cnot(s, 2, 2), DomainError);
  CHECK_THROWS_AS(apply_cascade(s, make_cascade(4)), DimensionMismatch);
  CHECK_THROWS_AS(run_cascade(PureQubit::zero(), 21), CapacityError);
  CHECK_THROWS_AS(FullStateVector::basis(25, 0), CapacityError);
}

TEST_CASE("cascade layout") {
  const auto c = make_cascade(4);
  REQUIRE(c.gates.size() == 3u);
  CHECK(c.gates[0] == std::pair{1, 4});
  CHECK(c.gates[2] == std::pair{3, 4});
  CHECK(make_cascade(1).gates.empty());
}

TEST_CASE("cascade acts on the Dicke sectors as the closed-form image") {
  std::mt19937_64 rng(52);
  for (int n = 2; n <= 12; ++n) {
    const auto v = oracle::random_dicke(rng, n);
    const auto out = apply_cascade(dicke_to_statevector(v), make_cascade(n));
    const auto img = cascade_on_dicke(v);
    // rebuild the image over |N-1;k>|b>
    const auto zero = dicke_to_statevector(DickeVector(n - 1, 1.0, 0.0));
    const auto one = dicke_to_statevector(DickeVector(n - 1, 0.0, 1.0));
    double err = 0.0;
    for (std::size_t r = 0; r < zero.size(); ++r) {
      err = std::max(err, std::abs(out[2 * r] - img.zero_zero * zero[r]));
      err = std::max(err, std::abs(out[2 * r + 1] - img.zero_one * zero[r] - img.one_one * one[r]));
    }
    CHECK(err < 1e-14);
  }
}

TEST_CASE("gate order does not matter because the gates commute") {
  std::mt19937_64 rng(53);
  for (int n = 3; n <= 8; ++n) {
    const FullStateVector s(n, oracle::random_state(rng, n));
    auto cascade = make_cascade(n);
    const auto ref = apply_cascade(s, cascade);
    std::shuffle(cascade.gates.begin(), cascade.gates.end(), rng);
    CHECK(distance(apply_cascade(s, cascade), ref) < 1e-15);
  }
}

TEST_CASE("v vectors are orthonormal") {
  for (int n = 2; n <= 14; ++n) {
    const auto [vp, vm] = v_vectors(n);
    CHECK(std::abs(inner(vp, vp) - 1.0) < 1e-14);
    CHECK(std::abs(inner(vm, vm) - 1.0) < 1e-14);
    CHECK(std::abs(inner(vp, vm)) < 1e-14);
  }
  CHECK_THROWS_AS(v_vectors(1), DomainError);
}

TEST_CASE("cascade output decomposes into the two branches") {
  std::mt19937_64 rng(54);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto psi = oracle::random_qubit(rng);
      const auto d = decompose(run_cascade(psi, n), psi, n);
      CHECK(d.residual < 1e-12);
      CHECK(std::abs(d.plus_weight() - success_probability(psi.theta(), n)) < 1e-12);
      CHECK(std::abs(d.plus_weight() + d.minus_weight() - 1.0) < 1e-12);
      const double c = std::cos(psi.theta() / 2);
      CHECK(std::abs(std::abs(d.amp_minus) - std::sqrt(n * (n - 1.0)) * c / d.normalization) < 1e-12);
    }
  }
}

TEST_CASE("decompose rejects states outside the two-branch form") {
  std::mt19937_64 rng(55);
  const FullStateVector junk(4, oracle::random_state(rng, 4));
  CHECK_THROWS_AS(decompose(junk, PureQubit(1.0, 1.0), 4), DecompositionError);
  CHECK_THROWS_AS(decompose(junk, PureQubit(1.0, 1.0), 3), DimensionMismatch);
}

TEST_CASE("success probability") {
  CHECK(success_probability(0.0, 4) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(success_probability(pi, 4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(success_probability(pi / 2, 2) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(success_probability(0.7, 1) == doctest::Approx(1.0).epsilon(1e-15));
  for (int n = 1; n < 50; ++n) {
    for (double t = 0.0; t < pi; t += 0.1) {
      CHECK(success_probability(t, n + 1) <= success_probability(t, n) + 1e-15);
      CHECK(success_probability(t, n) <= success_probability(std::min(pi, t + 0.1), n) + 1e-15);
    }
  }
  CHECK_THROWS_AS(success_probability(4.0, 2), DomainError);
}

TEST_CASE("post-selected qubit recovers the input exactly") {
  std::mt19937_64 rng(56);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto psi = oracle::random_qubit(rng);
      const auto out = run_cascade(psi, n);
      CHECK(std::abs(overlap_sq(post_selected_state(out, n), psi) - 1.0) < 1e-12);
      const auto img = cascade_on_dicke(symmetric_state(psi, n));
      CHECK(std::abs(overlap_sq(post_selected_state(img, n), psi) - 1.0) < 1e-12);
    }
  }
  for (int n : {100, 1000, 100000}) {
    const PureQubit psi(2.1, 4.0);
    const auto img = cascade_on_dicke(symmetric_state(psi, n));
    CHECK(std::abs(overlap_sq(post_selected_state(img, n), psi) - 1.0) < 1e-12);
  }
}

TEST_CASE("shot sampling") {
  const auto c = sample_shots(PureQubit(0.0, 0.0), 4, 100000, 7);
  CHECK(c.plus + c.minus == 100000u);
  const double se = std::sqrt(0.25 * 0.75 / 100000);
  CHECK(std::abs(c.plus / 1e5 - 0.25) < 3 * se);
  const auto all = sample_shots(PureQubit(pi, 0.0), 4, 1000, 7);
  CHECK(all.plus == 1000u);
  CHECK_THROWS_AS(sample_shots(PureQubit::zero(), 4, 0, 1), DomainError);
}

TEST_CASE("shot counts are seed-deterministic and thread-count independent") {
  const PureQubit psi(1.3, 0.2);
  const std::uint64_t shots = 5 * kShotChunk + 123;
  const auto a = sample_shots(psi, 3, shots, 2024);
  const auto b = sample_shots(psi, 3, shots, 2024);
  CHECK(a.plus == b.plus);
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 4}) {
    omp_set_num_threads(threads);
    CHECK(sample_shots(psi, 3, shots, 2024).plus == a.plus);
  }
  omp_set_num_threads(saved);
#endif
  CHECK(sample_shots(psi, 3, shots, 2025).plus != a.plus);
}
