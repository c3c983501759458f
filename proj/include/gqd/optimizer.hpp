#pragma once

// Derivative-free minimisation: restarted Nelder-Mead simplex search and a
// deterministic multi-start driver.

#include <functional>
#include <span>
#include <vector>

namespace gqd::opt {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  /// Evaluation budget for one local search (all restarts included).
  int max_evaluations = 2000;
  /// Converged when one full restart cycle improves the best value by less
  /// than this.
  double tolerance = 1e-10;
  /// Edge length of the initial simplex along each coordinate.
  double initial_step = 0.35;
};

struct LocalSearchResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  int cycles = 0;
  bool converged = false;
};

LocalSearchResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& options = {});

struct MultiStartResult {
  /// One entry per start, in start order.
  std::vector<LocalSearchResult> runs;
  std::size_t best = 0;
  /// Best-so-far value each time a later start improved on the incumbent.
  std::vector<double> best_history;
  long total_evaluations = 0;

  const LocalSearchResult& best_run() const { return runs[best]; }
};

/// Runs one local search per start, concurrently when threads > 1. The
/// reduction is by value with ties going to the lowest start index, so the
/// outcome does not depend on scheduling. `f` must be safe to call
/// concurrently.
MultiStartResult multi_start(const Objective& f, const std::vector<std::vector<double>>& starts,
                             const NelderMeadOptions& options, int threads);

}  // namespace gqd::opt
