#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace disentangle {

/// One row of the fidelity comparison table.
struct FidelityRow {
  int n;
  double f0_diluted;
  double f1_measure;
  double fmax_measure;
  double f2_universal;
  double f3_swap;
};

FidelityRow fidelity_row(int n);

/// f1 < fmax < f2 < f3 for n >= 2 and every value in [1/2, 1].
bool row_is_ordered(const FidelityRow& row);

inline constexpr int kMaxTableN = 1'000'000;
inline constexpr const char* kTableHeader = "N,F0_diluted,F1_measure,Fmax_measure,F2_universal,F3_swap";

/// 12 significant digits, '.' separator, no locale dependence.
std::string format_number(double v);
std::string format_row(const FidelityRow& row);

/// Writes the header and rows n_min..n_max (LF line endings). Rows are
/// computed concurrently and written in ascending order.
void write_table(int n_min, int n_max, std::ostream& out);

enum class VerifyLevel { kFast, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kFast;
  std::uint64_t seed = 42;
  /// Added to gamma_N when building the universal device under test; nonzero
  /// only for fault-injection runs.
  double gamma_perturbation = 0.0;
};

struct CheckResult {
  std::string name;
  bool pass;
  double residual;
  double tolerance;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

void print_checks(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace disentangle
