#include "gqd/optimizer.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gqd::opt {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

// A cycle ends once the simplex has collapsed in value or in extent.
constexpr double kValueSpread = 1e-14;
constexpr double kPointSpread = 1e-9;

class Budgeted {
 public:
  Budgeted(const Objective& f, int budget) : f_(f), budget_(budget) {}

  double operator()(const std::vector<double>& x) {
    ++count_;
    const double v = f_(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  }
  bool exhausted() const { return count_ >= budget_; }
  int count() const { return count_; }

 private:
  const Objective& f_;
  int budget_;
  int count_ = 0;
};

struct Vertex {
  std::vector<double> x;
  double value;
};

/// One simplex descent from `start`. Returns the best vertex.
Vertex descend(Budgeted& f, const Vertex& start, double step) {
  const std::size_t n = start.x.size();
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back(start);
  for (std::size_t i = 0; i < n && !f.exhausted(); ++i) {
    Vertex v = start;
    v.x[i] += step;
    v.value = f(v.x);
    simplex.push_back(std::move(v));
  }
  if (simplex.size() < n + 1) {
    return *std::min_element(simplex.begin(), simplex.end(),
                             [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };
  std::vector<double> centroid(n), trial(n);
  auto along = [&](double t, const std::vector<double>& from) {
    for (std::size_t i = 0; i < n; ++i) trial[i] = centroid[i] + t * (from[i] - centroid[i]);
    return trial;
  };

  while (!f.exhausted()) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    const Vertex& best = simplex.front();
    Vertex& worst = simplex.back();

    double extent = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i) extent = std::max(extent, std::abs(simplex[k].x[i] - best.x[i]));
    }
    if (worst.value - best.value <= kValueSpread || extent <= kPointSpread) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const std::vector<double> reflected = along(-kReflect, worst.x);
    const double fr = f(reflected);
    if (fr < simplex.front().value) {
      const std::vector<double> expanded = along(-kReflect * kExpand, worst.x);
      const double fe = f.exhausted() ? fr + 1.0 : f(expanded);
      if (fe < fr) {
        worst = {expanded, fe};
      } else {
        worst = {reflected, fr};
      }
      continue;
    }
    if (fr < simplex[n - 1].value) {
      worst = {reflected, fr};
      continue;
    }
    // Contraction, outside when the reflection beat the worst vertex.
    const bool outside = fr < worst.value;
    const std::vector<double> contracted = outside ? along(-kReflect * kContract, worst.x) : along(kContract, worst.x);
    const double fc = f(contracted);
    if ((outside && fc <= fr) || (!outside && fc < worst.value)) {
      worst = {contracted, fc};
      continue;
    }
    for (std::size_t k = 1; k <= n && !f.exhausted(); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        simplex[k].x[i] = simplex[0].x[i] + kShrink * (simplex[k].x[i] - simplex[0].x[i]);
      }
      simplex[k].value = f(simplex[k].x);
    }
  }
  return *std::min_element(simplex.begin(), simplex.end(), by_value);
}

}  // namespace

LocalSearchResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& options) {
  if (start.empty()) throw std::invalid_argument("nelder_mead: empty start point");
  if (options.max_evaluations < static_cast<int>(start.size()) + 2) {
    throw std::invalid_argument("nelder_mead: evaluation budget smaller than one simplex");
  }
  Budgeted budgeted(f, options.max_evaluations);
  Vertex best{std::move(start), 0.0};
  best.value = budgeted(best.x);

  LocalSearchResult out;
  while (!budgeted.exhausted()) {
    const double before = best.value;
    Vertex next = descend(budgeted, best, options.initial_step);
    ++out.cycles;
    if (next.value < best.value) best = std::move(next);
    // The first cycle always counts as progress: a restart around its result
    // is what confirms the minimum.
    if (out.cycles > 1 && before - best.value < options.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.x = std::move(best.x);
  out.value = best.value;
  out.evaluations = budgeted.count();
  return out;
}

MultiStartResult multi_start(const Objective& f, const std::vector<std::vector<double>>& starts,
                             const NelderMeadOptions& options, int threads) {
  if (starts.empty()) throw std::invalid_argument("multi_start: no start points");
  MultiStartResult out;
  out.runs.resize(starts.size());
  const int count = static_cast<int>(starts.size());
  const int team = std::max(1, std::min(threads, count));

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(team) if (team > 1)
  for (int i = 0; i < count; ++i) {
    try {
      out.runs[static_cast<std::size_t>(i)] = nelder_mead(f, starts[static_cast<std::size_t>(i)], options);
    } catch (...) {
#pragma omp critical(gqd_multi_start_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < out.runs.size(); ++i) {
    out.total_evaluations += out.runs[i].evaluations;
    if (i == 0 || out.runs[i].value < out.runs[out.best].value) {
      out.best = i;
      out.best_history.push_back(out.runs[i].value);
    }
  }
  return out;
}

}  // namespace gqd::opt
