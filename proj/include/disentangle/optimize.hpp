#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "disentangle/devices.hpp"

namespace disentangle {

struct CoordinateAscentOptions {
  int grid = 24;            // samples per coordinate line search
  int max_sweeps = 200;
  double tolerance = 1e-15; // stop when a sweep improves by less than this
};

struct AscentResult {
  std::vector<double> x;
  double value;
  int sweeps;
};

/// Maximizes f over 2 pi-periodic coordinates by cyclic line searches
/// (grid over the full period, then golden-section refinement).
AscentResult coordinate_ascent(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double> x0, const CoordinateAscentOptions& opts = {});

struct DeviceOptimum {
  DeviceTransform transform;
  double value;
  int best_restart;
  std::vector<double> parameters;
};

/// 5-parameter family satisfying the unitarity constraints by construction:
/// |D1|^2 = sin^2 p0, |D4|^2 = sin^2 p2, Re<D1|D4> = |D1||D4| cos p1 cos p3,
/// with residual phase p4 on D3.
DeviceTransform average_family(int n, const std::vector<double>& p);

/// Covariant family: D1, D4 with equal norms, D2, D3 orthogonal to both and to
/// each other with |D2|^2 = |D3|^2 = 1 - |D4|^2, and |D4|^2 fixed by the
/// proportionality condition given x = cos p0 cos p1. Throws
/// OptimizationFailure if the implied |D4|^2 is outside [0, 1].
DeviceTransform covariant_family(int n, const std::vector<double>& p);

/// Random-restart maximization of device_avg_fidelity over average_family.
/// Restarts run concurrently; the result is the maximum with ties broken by
/// the lowest restart index, so it depends only on (n, restarts, seed).
DeviceOptimum optimize_average(int n, int restarts, std::uint64_t seed);

/// Same over covariant_family.
DeviceOptimum optimize_universal(int n, int restarts, std::uint64_t seed);

}  // namespace disentangle
