#pragma once

// Subcommand bodies of the `gqd` executable. They write to caller-supplied
// streams and return the process exit code, so tests can drive them directly.

#include "gqd/dynamics.hpp"
#include "gqd/gqd.hpp"
#include "gqd/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gqd {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int invalid_input = 2;
inline constexpr int resource_limit = 3;
}  // namespace exit_code

/// Fixed CSV number format (12 significant digits, '.' separator).
std::string csv_number(double v);

struct ComputeRequest {
  std::string input;
  /// auto | numeric | closed
  std::string method = "auto";
  OptimizerOptions optimizer;
};

/// Emits one JSON record on `out`.
int cmd_compute(const ComputeRequest& request, std::ostream& out, std::ostream& err);

/// Rows "mu,n,gqd_bits" for each n token ("inf" for the large-n limit).
std::string figure1_csv(const std::vector<std::string>& n_list, int mu_steps);

struct Figure1Request {
  std::vector<std::string> n_list = {"2", "3", "5", "inf"};
  int mu_steps = 101;
  /// Empty writes the CSV to `out`.
  std::string output;
};

int cmd_figure1(const Figure1Request& request, std::ostream& out, std::ostream& err);

std::string scan_csv(const Scan& scan);
std::string scan_report_text(const PauliDiagonalParams& params, const Scan& scan);

struct DephaseScanRequest {
  PauliDiagonalParams params;
  int p_steps = 101;
  ScanOptions scan;
  /// Empty writes the CSV to `out` ahead of the report.
  std::string output;
};

int cmd_dephase_scan(const DephaseScanRequest& request, std::ostream& out, std::ostream& err);

struct VerifyRequest {
  std::string scope = "all";
  std::uint64_t seed = 0;
  int trials = 100;
  OptimizerOptions optimizer;
};

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err);

}  // namespace gqd
