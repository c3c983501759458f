#pragma once

// Cross-oracle self checks run by `gqd verify`: trace identities, the SO(3)
// homomorphism, entropy monotonicity, the two objective forms, and closed
// form versus numeric agreement.

#include "gqd/gqd.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gqd {

enum class VerifyScope { lemmas, theorems, all };

VerifyScope parse_verify_scope(const std::string& scope);

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Worst observed residual (or deviation) across the trials.
  double worst = 0.0;
  double tolerance = 0.0;
  int trials = 0;
  std::string detail;
};

struct VerifyOptions {
  VerifyScope scope = VerifyScope::all;
  std::uint64_t seed = 0;
  int trials = 100;
  OptimizerOptions optimizer;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace gqd
