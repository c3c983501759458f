#pragma once

// Global quantum discord: the numerical minimiser over local projective
// measurements, the shortcut for states with maximally mixed marginals, and
// the closed forms for the Werner-GHZ and Pauli-diagonal families.

#include "gqd/measurement.hpp"
#include "gqd/qcore.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gqd {

/// (1 - mu) I/2^n + mu |GHZ><GHZ|.
struct WernerGhzParams {
  int n = 2;
  double mu = 0.0;

  /// Throws InvalidInput unless n >= 2 and mu in [0, 1].
  void validate() const;
};

/// (I + c1 X^{(x)n} + c2 Y^{(x)n} + c3 Z^{(x)n}) / 2^n.
struct PauliDiagonalParams {
  int n = 2;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

struct PauliValidation {
  bool ok = true;
  bool odd = false;
  /// sqrt(c1^2 + c2^2 + c3^2); the constrained quantity for odd n.
  double d = 0.0;
  /// The four spectral weights for even n (unused for odd n).
  std::array<double, 4> lambda{};
  /// One human-readable line per violated constraint.
  std::vector<std::string> failures;

  std::string message() const;
};

/// Checks d <= 1 (odd n) or every lambda in [0, 1] (even n), plus n >= 2.
PauliValidation validate_pauli_params(const PauliDiagonalParams& params);

enum class Method { numeric, werner_ghz, pauli_diagonal, maximally_mixed };
std::string_view to_string(Method method);

struct OptimizerOptions {
  std::uint64_t seed = 0;
  /// 0 selects the default of 8 starts per qubit.
  int starts = 0;
  double tolerance = 1e-10;
  int max_evaluations = 2000;
  int dense_limit = kDefaultDenseLimit;
  /// 0 uses the GQD_THREADS / OpenMP default.
  int threads = 0;
};

struct Diagnostics {
  int starts = 0;
  long iterations = 0;
  int best_objective_history_length = 0;
  std::uint64_t seed = 0;
  /// Minimum before clipping to zero.
  double raw_value = 0.0;
  /// False when the best start ran out of budget before converging.
  bool converged = true;
};

struct GqdResult {
  double value = 0.0;
  std::optional<LocalMeasurement> optimal_measurement;
  Method method = Method::numeric;
  Diagnostics diagnostics;
};

/// Minimal loss of mutual information over local projective measurements,
/// by multi-start simplex search over 2N polar/azimuth angles.
GqdResult gqd_numeric(const DensityMatrix& rho, const OptimizerOptions& options = {});

/// -S(rho) + min S(Phi(rho)); requires every single-qubit marginal to be I/2
/// within 1e-8 and names the first qubit that is not.
GqdResult gqd_maximally_mixed(const DensityMatrix& rho, const OptimizerOptions& options = {});

/// Index of the first qubit whose marginal differs from I/2 by more than
/// `tolerance` (max-abs), or nullopt.
std::optional<int> first_non_mixed_marginal(const DensityMatrix& rho, double tolerance = 1e-8);

DensityMatrix ghz_state(int n);
DensityMatrix werner_ghz_state(const WernerGhzParams& params);
Spectrum werner_ghz_spectrum(const WernerGhzParams& params);
/// Closed form in scalar arithmetic; valid for any n >= 2 (no matrices).
double gqd_werner_ghz(const WernerGhzParams& params);
/// Large-n limit: D = mu.
double gqd_werner_ghz_asymptotic(double mu);

DensityMatrix pauli_diagonal_state(const PauliDiagonalParams& params);
Spectrum pauli_diagonal_spectrum(const PauliDiagonalParams& params);
/// f - g with f the binary entropy of max|c_i| and g from d (odd n) or the
/// four lambdas (even n).
double gqd_pauli_diagonal(const PauliDiagonalParams& params);

}  // namespace gqd
