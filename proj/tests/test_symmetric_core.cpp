#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "disentangle/errors.hpp"
#include "disentangle/quadrature.hpp"
#include "disentangle/symmetric_core.hpp"
#include "oracles.hpp"

using namespace disentangle;
using std::numbers::pi;

TEST_CASE("dilution angle examples") {
  CHECK(dilute_angle(pi / 2, 4) == doctest::Approx(0.927295218001612232).epsilon(1e-14));
  CHECK(dilute_angle(0.0, 9) == 0.0);
  CHECK(dilute_angle(pi, 9) == pi);
  CHECK(dilute_angle(1.234, 1) == doctest::Approx(1.234).epsilon(1e-15));
  CHECK_THROWS_AS(dilute_angle(-0.1, 2), DomainError);
  CHECK_THROWS_AS(dilute_angle(pi + 1e-9, 2), DomainError);
  CHECK_THROWS_AS(dilute_angle(1.0, 0), DomainError);
}

TEST_CASE("dilution increases with theta and shrinks with N") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    double a = pi * oracle::uniform(rng);
    double b = pi * oracle::uniform(rng);
    if (a > b) std::swap(a, b);
    const int n = 1 + static_cast<int>(oracle::uniform(rng) * 200);
    CHECK(dilute_angle(a, n) <= dilute_angle(b, n));
    CHECK(dilute_angle(a, n + 1) <= dilute_angle(a, n));
    CHECK(dilute_angle(a, n) <= a + 1e-15);
  }
}

TEST_CASE("symmetric state equals explicit symmetrization of tensor products") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto psi = oracle::random_qubit(rng);
      const auto got = dicke_to_statevector(symmetric_state(psi, n));
      const auto want = oracle::brute_symmetrize(psi.alpha(), psi.beta(), n);
      double err = 0.0;
      for (std::size_t i = 0; i < want.size(); ++i) err = std::max(err, std::abs(got[i] - want[i]));
      CHECK(err < 1e-13);
    }
  }
}

TEST_CASE("symmetric state is invariant under qubit permutations") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 8; ++n) {
    const auto state = dicke_to_statevector(symmetric_state(oracle::random_qubit(rng), n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      double err = 0.0;
      for (std::size_t i = 0; i < state.size(); ++i) {
        std::size_t j = 0;
        for (int b = 0; b < n; ++b) {
          if ((i >> b) & 1u) j |= std::size_t{1} << perm[static_cast<std::size_t>(b)];
        }
        err = std::max(err, std::abs(state[i] - state[j]));
      }
      CHECK(err == 0.0);
    }
  }
}

TEST_CASE("closed-form marginal equals the partial trace on every qubit") {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = oracle::random_dicke(rng, n);
      const auto closed = dicke_marginal(v).matrix();
      const auto amps = dicke_to_statevector(v);
      const std::vector<Complex> copy(amps.amps().begin(), amps.amps().end());
      for (int which = 1; which <= n; ++which) {
        CHECK((reduced_qubit(amps, which).matrix() - closed).norm() < 1e-13);
        CHECK((oracle::brute_reduced(copy, n, which) - closed).norm() < 1e-13);
      }
    }
  }
}

TEST_CASE("marginal of a random symmetric state is always a valid density operator") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(oracle::uniform(rng) * 1000);
    const auto rho = dicke_marginal(oracle::random_dicke(rng, n));
    CHECK(rho.min_eigenvalue() > -1e-12);
    const auto& m = rho.matrix();
    CHECK(std::abs(m.trace() - Complex{1.0}) < 1e-12);
    CHECK((m - m.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("average single-qubit fidelity of the symmetric marginal") {
  CHECK(diluted_avg_fidelity(1) == 1.0);
  CHECK(diluted_avg_fidelity(2) == doctest::Approx(0.806852819440054691).epsilon(1e-14));
  CHECK(std::abs(diluted_avg_fidelity(1000000) - 0.50000099999) < 1e-10);
  // integrate the statevector route independently of the closed-form marginal
  const BlochQuadrature q(64, 3);
  for (int n = 2; n <= 12; ++n) {
    const double avg = bloch_average(
        [n](double t, double p) {
          const PureQubit psi(t, p);
          const auto s = symmetric_state(psi, n);
          const auto amps = dicke_to_statevector(s);
          const std::vector<Complex> copy(amps.amps().begin(), amps.amps().end());
          const auto rho = oracle::brute_reduced(copy, n, 1);
          const auto a = psi.amplitudes();
          return (std::conj(a[0]) * rho(0, 0) * a[0] + std::conj(a[0]) * rho(0, 1) * a[1] +
                  std::conj(a[1]) * rho(1, 0) * a[0] + std::conj(a[1]) * rho(1, 1) * a[1])
              .real();
        },
        q);
    CHECK(std::abs(avg - diluted_avg_fidelity(n)) < 1e-9);
  }
}

TEST_CASE("fidelity examples and contracts") {
  CHECK(diluted_fidelity(0.0, 0.0, 7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(diluted_fidelity(1.0, 2.0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  // |1> becomes the W state; its marginal keeps weight 1/N on |1>
  CHECK(diluted_fidelity(pi, 0.0, 4) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(fidelity_pure(PureQubit::zero(), DensityOperator(Eigen::MatrixXcd::Identity(3, 3) / 3.0)),
                  DimensionMismatch);
  const auto state = dicke_one(3);
  CHECK_THROWS_AS(reduced_qubit(state, 0), DomainError);
  CHECK_THROWS_AS(reduced_qubit(state, 4), DomainError);
  CHECK_THROWS_AS(dicke_to_statevector(DickeVector(25, 1.0, 0.0)), CapacityError);
  CHECK_THROWS_AS(DickeVector(2, 1.0, 1.0), ContractViolation);
  CHECK_THROWS_AS(PureQubit(0.5, 2 * pi), DomainError);
}

TEST_CASE("W state has weight 1/sqrt(N) on each single excitation") {
  const auto w = dicke_one(5);
  for (int k = 1; k <= 5; ++k) CHECK(w[qubit_mask(5, k)].real() == doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK(w[0] == Complex{0.0});
}
