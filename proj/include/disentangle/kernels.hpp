#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp with the same
// signature; the library calls the omp variants and the tests check them
// against the serial ones.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "disentangle/states.hpp"

namespace disentangle {

struct SphereNode {
  double theta;
  double phi;
  double weight;
};

/// Reduced single-qubit matrix entries: rho00, rho11 and rho01.
struct QubitMarginal {
  double p0 = 0.0;
  double p1 = 0.0;
  Complex coherence{0.0, 0.0};
};

namespace kernels {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

namespace serial {

template <class T, class F>
T weighted_sum(std::span<const SphereNode> nodes, F&& f, T zero) {
  T acc = zero;
  for (const auto& node : nodes) acc += node.weight * f(node.theta, node.phi);
  return acc;
}

QubitMarginal partial_trace_qubit(std::span<const Complex> amps, int n, int which);
void apply_cnot(std::span<Complex> amps, int n, int control, int target);

}  // namespace serial

namespace omp {

/// Per-thread partial sums combined in thread order, so the result is
/// reproducible for a fixed thread count.
template <class T, class F>
T weighted_sum(std::span<const SphereNode> nodes, F&& f, T zero) {
  const auto count = static_cast<std::int64_t>(nodes.size());
  std::vector<T> partial(static_cast<std::size_t>(max_threads()), zero);
#pragma omp parallel
  {
    T acc = zero;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& node = nodes[static_cast<std::size_t>(i)];
      acc += node.weight * f(node.theta, node.phi);
    }
    partial[static_cast<std::size_t>(thread_id())] = acc;
  }
  T total = zero;
  for (const auto& p : partial) total += p;
  return total;
}

QubitMarginal partial_trace_qubit(std::span<const Complex> amps, int n, int which);
void apply_cnot(std::span<Complex> amps, int n, int control, int target);

}  // namespace omp
}  // namespace kernels
}  // namespace disentangle
