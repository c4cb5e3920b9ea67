// Command-line frontend: fidelity table, verification suite, probabilistic
// network simulation. Data goes to stdout or --output, diagnostics to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "disentangle/network.hpp"
#include "disentangle/report.hpp"
#include "disentangle/symmetric_core.hpp"

namespace {

using namespace disentangle;

int cmd_table(int n_min, int n_max, const std::string& output) {
  if (output == "-") {
    write_table(n_min, n_max, std::cout);
    return 0;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << output << " for writing\n";
    return 2;
  }
  write_table(n_min, n_max, file);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing " << output << '\n';
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& level, std::uint64_t seed, double perturb_gamma) {
  VerifyOptions opts;
  opts.level = level == "full" ? VerifyLevel::kFull : VerifyLevel::kFast;
  opts.seed = seed;
  opts.gamma_perturbation = perturb_gamma;
  const auto checks = run_verification(opts);
  print_checks(checks, std::cerr);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  std::cerr << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_network(double theta, double phi, int n, std::uint64_t shots, std::uint64_t seed) {
  const PureQubit psi(theta, phi);
  const double p = success_probability(theta, n);
  const auto counts = sample_shots(psi, n, shots, seed);
  const double freq = static_cast<double>(counts.plus) / static_cast<double>(shots);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
  PureQubit recovered = n <= kMaxCascadeQubits ? post_selected_state(run_cascade(psi, n), n)
                                               : post_selected_state(cascade_on_dicke(symmetric_state(psi, n)), n);
  std::cout << "quantity,value\n"
            << "theta," << format_number(theta) << '\n'
            << "phi," << format_number(phi) << '\n'
            << "n," << n << '\n'
            << "shots," << shots << '\n'
            << "seed," << seed << '\n'
            << "rng," << kShotRng << '\n'
            << "exact_p," << format_number(p) << '\n'
            << "plus," << counts.plus << '\n'
            << "minus," << counts.minus << '\n'
            << "empirical_p," << format_number(freq) << '\n'
            << "std_error," << format_number(se) << '\n'
            << "post_selected_fidelity," << format_number(overlap_sq(recovered, psi)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disentangler fidelity laboratory"};
  app.require_subcommand(1);

  int n_min = 1;
  int n_max = 50;
  std::string output = "-";
  auto* table = app.add_subcommand("table", "Write the fidelity table as CSV");
  table->add_option("--n-min", n_min, "Smallest N")->check(CLI::Range(1, kMaxTableN));
  table->add_option("--n-max", n_max, "Largest N")->check(CLI::Range(1, kMaxTableN));
  table->add_option("--output", output, "Output path, '-' for stdout");

  std::string level = "fast";
  std::uint64_t seed = 42;
  double perturb_gamma = 0.0;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--seed", seed, "Seed for random inputs");
  verify->add_option("--perturb-gamma", perturb_gamma, "Fault injection: offset added to gamma_N")
      ->group("");  // test-only, hidden from help

  double theta = 0.0;
  double phi = 0.0;
  int n = 2;
  std::uint64_t shots = 1000;
  std::uint64_t net_seed = 42;
  auto* network = app.add_subcommand("network", "Simulate the probabilistic C-NOT disentangler");
  network->add_option("--theta", theta, "Polar angle in [0, pi]")->required();
  network->add_option("--phi", phi, "Azimuth in [0, 2 pi)");
  network->add_option("--n", n, "Qubit count")->check(CLI::PositiveNumber);
  network->add_option("--shots", shots, "Number of shots")->check(CLI::PositiveNumber);
  network->add_option("--seed", net_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table) {
      if (n_min > n_max) {
        std::cerr << "error: --n-min must not exceed --n-max\n";
        return 2;
      }
      return cmd_table(n_min, n_max, output);
    }
    if (*verify) return cmd_verify(level, seed, perturb_gamma);
    if (*network) return cmd_network(theta, phi, n, shots, net_seed);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
