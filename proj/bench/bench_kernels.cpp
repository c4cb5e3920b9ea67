// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "disentangle/kernels.hpp"
#include "disentangle/quadrature.hpp"

using namespace disentangle;

namespace {

std::vector<Complex> random_state(int n) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  std::vector<Complex> v(std::size_t{1} << n);
  double nrm = 0.0;
  for (auto& c : v) {
    c = {g(rng), g(rng)};
    nrm += std::norm(c);
  }
  for (auto& c : v) c /= std::sqrt(nrm);
  return v;
}

double integrand(double t, double p) { return std::exp(std::cos(t)) * (1.0 + 0.3 * std::sin(2.0 * p)); }

template <bool Parallel>
void BM_WeightedSum(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BlochQuadrature q(k, k);
  for (auto _ : state) {
    double r = Parallel ? kernels::omp::weighted_sum(q.nodes(), integrand, 0.0)
                        : kernels::serial::weighted_sum(q.nodes(), integrand, 0.0);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * k * k);
}

template <bool Parallel>
void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto amps = random_state(n);
  for (auto _ : state) {
    auto m = Parallel ? kernels::omp::partial_trace_qubit(amps, n, n / 2)
                      : kernels::serial::partial_trace_qubit(amps, n, n / 2);
    benchmark::DoNotOptimize(m);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(amps.size() * sizeof(Complex)));
}

template <bool Parallel>
void BM_Cnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = random_state(n);
  for (auto _ : state) {
    if (Parallel) {
      kernels::omp::apply_cnot(amps, n, 1, n);
    } else {
      kernels::serial::apply_cnot(amps, n, 1, n);
    }
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(amps.size() * sizeof(Complex)));
}

}  // namespace

BENCHMARK(BM_WeightedSum<false>)->Name("weighted_sum/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_WeightedSum<true>)->Name("weighted_sum/omp")->Arg(64)->Arg(256);
BENCHMARK(BM_PartialTrace<false>)->Name("partial_trace/serial")->Arg(16)->Arg(22);
BENCHMARK(BM_PartialTrace<true>)->Name("partial_trace/omp")->Arg(16)->Arg(22);
BENCHMARK(BM_Cnot<false>)->Name("cnot/serial")->Arg(16)->Arg(22);
BENCHMARK(BM_Cnot<true>)->Name("cnot/omp")->Arg(16)->Arg(22);

BENCHMARK_MAIN();
