#include "disentangle/kernels.hpp"

#include <utility>

namespace disentangle::kernels {
namespace {

// Index of the r-th basis state whose bit `mask` is clear.
constexpr std::uint64_t insert_zero(std::uint64_t r, std::uint64_t mask) {
  const std::uint64_t low = r & (mask - 1);
  return ((r ^ low) << 1) | low;
}

}  // namespace

namespace serial {

QubitMarginal partial_trace_qubit(std::span<const Complex> amps, int n, int which) {
  const std::uint64_t mask = qubit_mask(n, which);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  QubitMarginal out;
  for (std::uint64_t r = 0; r < half; ++r) {
    const std::uint64_t i = insert_zero(r, mask);
    const Complex a = amps[i];
    const Complex b = amps[i | mask];
    out.p0 += std::norm(a);
    out.p1 += std::norm(b);
    out.coherence += a * std::conj(b);
  }
  return out;
}

void apply_cnot(std::span<Complex> amps, int n, int control, int target) {
  const std::uint64_t cm = qubit_mask(n, control);
  const std::uint64_t tm = qubit_mask(n, target);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & cm) && !(i & tm)) std::swap(amps[i], amps[i | tm]);
  }
}

}  // namespace serial

namespace omp {

QubitMarginal partial_trace_qubit(std::span<const Complex> amps, int n, int which) {
  const std::uint64_t mask = qubit_mask(n, which);
  const auto half = static_cast<std::int64_t>(std::uint64_t{1} << (n - 1));
  double p0 = 0.0;
  double p1 = 0.0;
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p0, p1, re, im)
  for (std::int64_t r = 0; r < half; ++r) {
    const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(r), mask);
    const Complex a = amps[i];
    const Complex b = amps[i | mask];
    p0 += std::norm(a);
    p1 += std::norm(b);
    const Complex c = a * std::conj(b);
    re += c.real();
    im += c.imag();
  }
  return {p0, p1, {re, im}};
}

void apply_cnot(std::span<Complex> amps, int n, int control, int target) {
  const std::uint64_t cm = qubit_mask(n, control);
  const std::uint64_t tm = qubit_mask(n, target);
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < size; ++s) {
    const auto i = static_cast<std::uint64_t>(s);
    if ((i & cm) && !(i & tm)) std::swap(amps[i], amps[i | tm]);
  }
}

}  // namespace omp
}  // namespace disentangle::kernels
