#include "gqd/dynamics.hpp"

#include "gqd/kernels.hpp"
#include "gqd/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gqd {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "channel strength p = " << p << " is outside [0, 1]";
    throw InvalidInput(os.str());
  }
}

// Curvature values below this are floating-point noise, not shape.
constexpr double kCurvatureFloor = 1e-8;

}  // namespace

DensityMatrix phase_damping(const DensityMatrix& rho, int qubit, double p) {
  require_probability(p);
  if (qubit < 0 || qubit >= rho.n_qubits()) {
    throw InvalidInput("phase_damping: qubit index " + std::to_string(qubit) + " out of range");
  }
  return DensityMatrix::trusted(kernels::omp::phase_damp(rho.matrix(), qubit, p));
}

PauliDiagonalParams dephase_pauli_params(const PauliDiagonalParams& params, double p, int dephased_qubits) {
  require_probability(p);
  if (dephased_qubits < 1 || dephased_qubits > params.n) {
    throw InvalidInput("number of dephased qubits must be between 1 and n");
  }
  const auto v = validate_pauli_params(params);
  if (!v.ok) throw InvalidInput("invalid Pauli-diagonal coefficients: " + v.message());
  const double shrink = std::pow(1.0 - p, dephased_qubits);
  return {params.n, params.c1 * shrink, params.c2 * shrink, params.c3};
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::x_dominant: return "x_dominant";
    case Branch::y_dominant: return "y_dominant";
    case Branch::z_dominant: return "z_dominant";
  }
  return "unknown";
}

Branch active_branch(const PauliDiagonalParams& params) {
  const double ax = std::abs(params.c1);
  const double ay = std::abs(params.c2);
  const double az = std::abs(params.c3);
  if (az > 0.0 && az >= ax && az >= ay) return Branch::z_dominant;
  if (ax >= ay && ax >= az) return Branch::x_dominant;
  if (ay >= az) return Branch::y_dominant;
  return Branch::z_dominant;
}

std::optional<double> sudden_transition_point(const PauliDiagonalParams& params, int dephased_qubits) {
  const double transverse = std::max(std::abs(params.c1), std::abs(params.c2));
  const double az = std::abs(params.c3);
  if (!(az > 0.0 && az < transverse)) return std::nullopt;
  return 1.0 - std::pow(az / transverse, 1.0 / dephased_qubits);
}

std::vector<double> uniform_grid(int steps) {
  if (steps < 2) throw InvalidInput("grid needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(i) / (steps - 1);
  return out;
}

std::vector<Kink> detect_kinks(std::span<const double> p, std::span<const double> values,
                               std::span<const Branch> branches, double kink_factor) {
  const std::size_t n = values.size();
  std::vector<double> curvature(n, 0.0);
  std::vector<double> significant;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = p[i] - p[i - 1];
    const double h2 = p[i + 1] - p[i];
    const double d2 = 2.0 * ((values[i + 1] - values[i]) / h2 - (values[i] - values[i - 1]) / h1) / (h1 + h2);
    curvature[i] = std::abs(d2);
    if (curvature[i] > kCurvatureFloor) significant.push_back(curvature[i]);
  }
  double threshold = kCurvatureFloor;
  if (!significant.empty()) {
    auto mid = significant.begin() + static_cast<std::ptrdiff_t>(significant.size() / 2);
    std::nth_element(significant.begin(), mid, significant.end());
    threshold = std::max(threshold, kink_factor * *mid);
  }

  // A slope jump only touches the stencils adjacent to it, so a real spike
  // also stands out against the stencils two points away on both sides.
  // Smooth but strongly curved stretches (near a log singularity of the
  // entropy) do not. Near the ends there is no such baseline and only branch
  // changes are reported.
  std::vector<char> spike(n, 0), change(n, 0);
  for (std::size_t i = 3; i + 3 < n; ++i) {
    const double local = std::max(curvature[i - 2], curvature[i + 2]);
    spike[i] = curvature[i] > threshold && curvature[i] > kink_factor * local;
  }
  for (std::size_t i = 1; i < n && i < branches.size(); ++i) change[i] = branches[i] != branches[i - 1];

  std::vector<Kink> kinks;
  std::size_t i = 0;
  while (i < n) {
    if (!spike[i] && !change[i]) {
      ++i;
      continue;
    }
    // Adjacent flags belong to the same non-analytic point.
    std::size_t j = i;
    while (j + 1 < n && (spike[j + 1] || change[j + 1])) ++j;
    Kink k;
    std::size_t pick = i;
    bool have_change = false;
    for (std::size_t t = i; t <= j; ++t) {
      k.branch_change |= change[t] != 0;
      k.curvature_spike |= spike[t] != 0;
      if (change[t] && !have_change) {
        pick = t;
        have_change = true;
      } else if (!have_change && curvature[t] > curvature[pick]) {
        pick = t;
      }
    }
    k.index = pick;
    k.p = p[pick];
    kinks.push_back(k);
    i = j + 1;
  }
  return kinks;
}

std::vector<Plateau> detect_plateaus(std::span<const double> p, std::span<const double> values, double tolerance,
                                     int min_points) {
  std::vector<Plateau> out;
  const std::size_t n = values.size();
  std::size_t i = 0;
  while (i < n) {
    double lo = values[i];
    double hi = values[i];
    std::size_t j = i;
    while (j + 1 < n) {
      const double nlo = std::min(lo, values[j + 1]);
      const double nhi = std::max(hi, values[j + 1]);
      if (nhi - nlo > tolerance) break;
      lo = nlo;
      hi = nhi;
      ++j;
    }
    if (static_cast<int>(j - i + 1) >= min_points) {
      out.push_back({i, j, p[i], p[j], 0.5 * (lo + hi)});
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

Scan scan_gqd_vs_p(const PauliDiagonalParams& params, std::span<const double> grid, const ScanOptions& options) {
  const auto v = validate_pauli_params(params);
  if (!v.ok) throw InvalidInput("invalid Pauli-diagonal coefficients: " + v.message());
  if (grid.empty()) throw InvalidInput("scan grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_probability(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1])) throw InvalidInput("scan grid must be strictly increasing");
  }

  Scan scan;
  scan.records.resize(grid.size());
  const long count = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (count >= 256)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const PauliDiagonalParams evolved = dephase_pauli_params(params, grid[idx], options.dephased_qubits);
    scan.records[idx] = {grid[idx], evolved.c1, evolved.c2, evolved.c3, gqd_pauli_diagonal(evolved),
                         active_branch(evolved)};
  }

  std::vector<double> values(grid.size());
  std::vector<Branch> branches(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = scan.records[i].gqd;
    branches[i] = scan.records[i].active_branch;
  }
  scan.report.predicted_transition = sudden_transition_point(params, options.dephased_qubits);
  scan.report.kinks = detect_kinks(grid, values, branches, options.kink_factor);
  scan.report.plateaus = detect_plateaus(grid, values, options.plateau_tolerance, options.min_plateau_points);
  return scan;
}

}  // namespace gqd
