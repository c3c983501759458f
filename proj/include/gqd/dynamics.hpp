#pragma once

// Local phase damping of Pauli-diagonal states and detection of sudden
// transitions (kinks) and frozen plateaus of GQD along the channel strength.

#include "gqd/gqd.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gqd {

/// Kraus pair E0 = sqrt(1 - p/2) I, E1 = sqrt(p/2) sigma_z on `qubit`.
DensityMatrix phase_damping(const DensityMatrix& rho, int qubit, double p);

/// Coefficient map (c1, c2, c3) -> (c1 (1-p)^k, c2 (1-p)^k, c3) for k
/// dephased qubits. k = 1 is the single-qubit channel; k > 1 applies the same
/// channel independently to k qubits.
PauliDiagonalParams dephase_pauli_params(const PauliDiagonalParams& params, double p, int dephased_qubits = 1);

enum class Branch { x_dominant, y_dominant, z_dominant };
std::string_view to_string(Branch branch);

/// Which |c_i| realises max{|c1|,|c2|,|c3|}. Ties go to z when |c3| > 0,
/// otherwise to x before y.
Branch active_branch(const PauliDiagonalParams& params);

/// p* = 1 - (|c3| / max{|c1|,|c2|})^{1/k} when 0 < |c3| < max{|c1|,|c2|};
/// nullopt otherwise (including the tie |c3| = max{|c1|,|c2|}).
std::optional<double> sudden_transition_point(const PauliDiagonalParams& params, int dephased_qubits = 1);

struct SweepRecord {
  double p = 0.0;
  double c1_p = 0.0;
  double c2_p = 0.0;
  double c3_p = 0.0;
  double gqd = 0.0;
  Branch active_branch = Branch::z_dominant;
};

struct Kink {
  std::size_t index = 0;
  double p = 0.0;
  bool branch_change = false;
  bool curvature_spike = false;
};

struct Plateau {
  std::size_t first = 0;
  std::size_t last = 0;
  double p_begin = 0.0;
  double p_end = 0.0;
  double value = 0.0;
};

struct ScanReport {
  std::optional<double> predicted_transition;
  std::vector<Kink> kinks;
  std::vector<Plateau> plateaus;
};

struct ScanOptions {
  double plateau_tolerance = 1e-7;
  /// Second differences above this multiple of the median are kinks.
  double kink_factor = 10.0;
  int min_plateau_points = 3;
  int dephased_qubits = 1;
};

struct Scan {
  std::vector<SweepRecord> records;
  ScanReport report;
};

/// Evaluates the closed-form GQD of the dephased state at every grid point
/// and assembles the kink/plateau report. The grid must be strictly
/// increasing inside [0, 1].
Scan scan_gqd_vs_p(const PauliDiagonalParams& params, std::span<const double> grid, const ScanOptions& options = {});

/// `steps` evenly spaced points from 0 to 1 inclusive.
std::vector<double> uniform_grid(int steps);

/// Kink detection on an arbitrary sampled curve (exposed for testing).
std::vector<Kink> detect_kinks(std::span<const double> p, std::span<const double> values,
                               std::span<const Branch> branches, double kink_factor);
std::vector<Plateau> detect_plateaus(std::span<const double> p, std::span<const double> values, double tolerance,
                                     int min_points);

}  // namespace gqd
