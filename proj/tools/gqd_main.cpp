#include "gqd/commands.hpp"
#include "gqd/parallel.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

struct CommonFlags {
  std::uint64_t seed = 0;
  int starts = 0;
  double tol = 1e-10;
  int max_n = gqd::kDefaultDenseLimit;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--starts", f.starts, "optimizer starts (0 = 8 per qubit)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", f.tol, "simplex convergence tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--max-n", f.max_n, "largest qubit count for dense numerics")
      ->check(CLI::Range(2, 24))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "output path (default: stdout)");
}

gqd::OptimizerOptions optimizer_from(const CommonFlags& f) {
  gqd::OptimizerOptions o;
  o.seed = f.seed;
  o.starts = f.starts;
  o.tolerance = f.tol;
  o.dense_limit = f.max_n;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global quantum discord of multi-qubit states"};
  app.require_subcommand(1);

  CommonFlags compute_flags, figure_flags, scan_flags, verify_flags;

  gqd::ComputeRequest compute;
  auto* compute_cmd = app.add_subcommand("compute", "GQD of a state document");
  add_common(compute_cmd, compute_flags);
  compute_cmd->add_option("--input,input", compute.input, "state document (JSON)")->required();
  compute_cmd->add_option("--method", compute.method, "auto, numeric or closed")
      ->check(CLI::IsMember({"auto", "numeric", "closed"}))
      ->capture_default_str();

  gqd::Figure1Request figure;
  auto* figure_cmd = app.add_subcommand("figure1", "Werner-GHZ GQD curves versus mu as CSV");
  add_common(figure_cmd, figure_flags);
  figure_cmd->add_option("--n-list", figure.n_list, "qubit counts, or inf")->delimiter(',')->capture_default_str();
  figure_cmd->add_option("--mu-steps", figure.mu_steps, "grid points in mu")->capture_default_str();

  gqd::DephaseScanRequest scan;
  scan.params = {2, 0.5, 0.1, 0.2};
  auto* scan_cmd = app.add_subcommand("dephase-scan", "GQD of a dephased Pauli-diagonal state versus p");
  add_common(scan_cmd, scan_flags);
  scan_cmd->add_option("--n", scan.params.n, "qubits")->capture_default_str();
  scan_cmd->add_option("--c1", scan.params.c1)->capture_default_str();
  scan_cmd->add_option("--c2", scan.params.c2)->capture_default_str();
  scan_cmd->add_option("--c3", scan.params.c3)->capture_default_str();
  scan_cmd->add_option("--p-steps", scan.p_steps, "grid points in p")->capture_default_str();
  scan_cmd->add_option("--dephased-qubits", scan.scan.dephased_qubits, "qubits hit by the channel")
      ->capture_default_str();
  scan_cmd->add_option("--plateau-tol", scan.scan.plateau_tolerance)->capture_default_str();

  gqd::VerifyRequest verify;
  auto* verify_cmd = app.add_subcommand("verify", "self checks of identities and closed forms");
  add_common(verify_cmd, verify_flags);
  verify_cmd->add_option("--scope", verify.scope, "lemmas, theorems or all")->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gqd::exit_code::invalid_input;
  }

  try {
    if (*compute_cmd) {
      compute.optimizer = optimizer_from(compute_flags);
      if (!compute_flags.out.empty()) {
        std::ofstream file(compute_flags.out);
        if (!file) {
          std::cerr << "error: cannot open " << compute_flags.out << " for writing\n";
          return gqd::exit_code::invalid_input;
        }
        return gqd::cmd_compute(compute, file, std::cerr);
      }
      return gqd::cmd_compute(compute, std::cout, std::cerr);
    }
    if (*figure_cmd) {
      figure.output = figure_flags.out;
      return gqd::cmd_figure1(figure, std::cout, std::cerr);
    }
    if (*scan_cmd) {
      scan.output = scan_flags.out;
      return gqd::cmd_dephase_scan(scan, std::cout, std::cerr);
    }
    verify.seed = verify_flags.seed;
    verify.optimizer = optimizer_from(verify_flags);
    return gqd::cmd_verify(verify, std::cout, std::cerr);
  } catch (const gqd::SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gqd::exit_code::resource_limit;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return gqd::exit_code::resource_limit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gqd::exit_code::invalid_input;
  }
}
