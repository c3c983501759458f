#include "gqd/gqd.hpp"

#include "gqd/optimizer.hpp"
#include "gqd/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace gqd {

namespace {

/// x log2 x with 0 log 0 = 0.
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void require_dense(int n, const OptimizerOptions& options) {
  if (n < 2) throw InvalidInput("GQD needs at least two qubits");
  if (n > options.dense_limit) {
    throw SizeLimitExceeded("state has " + std::to_string(n) + " qubits, above the dense limit of " +
                            std::to_string(options.dense_limit));
  }
}

bool is_maximally_mixed(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.dim());
  return max_abs(rho.matrix() - CMatrix::Identity(rho.dim(), rho.dim()) / d) < 1e-13;
}

/// Axis seeds (all-z, all-x, all-y) first, then uniform random directions.
std::vector<std::vector<double>> start_points(int n, int count, std::uint64_t seed) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const std::array<std::pair<double, double>, 3> axes = {{{0.0, 0.0}, {half_pi, 0.0}, {half_pi, half_pi}}};
  std::vector<std::vector<double>> out;
  for (int k = 0; k < std::min(count, 3); ++k) {
    std::vector<double> x;
    for (int q = 0; q < n; ++q) {
      x.push_back(axes[static_cast<std::size_t>(k)].first);
      x.push_back(axes[static_cast<std::size_t>(k)].second);
    }
    out.push_back(std::move(x));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> x;
    for (int q = 0; q < n; ++q) {
      x.push_back(std::acos(2.0 * unit(rng) - 1.0));
      x.push_back(2.0 * std::numbers::pi * unit(rng));
    }
    out.push_back(std::move(x));
  }
  return out;
}

template <typename Eval>
GqdResult minimise(const DensityMatrix& rho, const OptimizerOptions& options, Method method, Eval eval) {
  const int n = rho.n_qubits();
  GqdResult result;
  result.method = method;
  result.diagnostics.seed = options.seed;

  if (is_maximally_mixed(rho)) {
    result.optimal_measurement = LocalMeasurement::uniform(n, BlochVector::axis(Axis::z));
    return result;
  }

  const int count = options.starts > 0 ? options.starts : 8 * n;
  const auto starts = start_points(n, count, options.seed);
  const opt::Objective objective = [&](std::span<const double> angles) {
    return eval(LocalMeasurement::from_angles(angles));
  };
  opt::NelderMeadOptions nm;
  nm.max_evaluations = options.max_evaluations;
  nm.tolerance = options.tolerance;
  const int threads = options.threads > 0 ? options.threads : parallel::max_threads();
  const opt::MultiStartResult ms = opt::multi_start(objective, starts, nm, threads);

  const auto& best = ms.best_run();
  result.value = std::max(best.value, 0.0);
  result.optimal_measurement = canonicalize(LocalMeasurement::from_angles(best.x));
  result.diagnostics.starts = count;
  result.diagnostics.iterations = ms.total_evaluations;
  result.diagnostics.best_objective_history_length = static_cast<int>(ms.best_history.size());
  result.diagnostics.raw_value = best.value;
  result.diagnostics.converged = best.converged;
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Method method) {
  switch (method) {
    case Method::numeric: return "numeric";
    case Method::werner_ghz: return "werner_ghz";
    case Method::pauli_diagonal: return "pauli_diagonal";
    case Method::maximally_mixed: return "maximally_mixed";
  }
  return "unknown";
}

GqdResult gqd_numeric(const DensityMatrix& rho, const OptimizerOptions& options) {
  require_dense(rho.n_qubits(), options);
  const MutualInformationLoss loss(rho);
  return minimise(rho, options, Method::numeric, [&](const LocalMeasurement& m) { return loss.evaluate(m); });
}

std::optional<int> first_non_mixed_marginal(const DensityMatrix& rho, double tolerance) {
  for (int q = 0; q < rho.n_qubits(); ++q) {
    const CMatrix m = marginal(rho, q).matrix();
    if (max_abs(m - 0.5 * CMatrix::Identity(2, 2)) > tolerance) return q;
  }
  return std::nullopt;
}

GqdResult gqd_maximally_mixed(const DensityMatrix& rho, const OptimizerOptions& options) {
  require_dense(rho.n_qubits(), options);
  if (const auto q = first_non_mixed_marginal(rho)) {
    throw InvalidInput("marginal of qubit " + std::to_string(*q) + " is not maximally mixed");
  }
  const MutualInformationLoss loss(rho);
  return minimise(rho, options, Method::maximally_mixed,
                  [&](const LocalMeasurement& m) { return loss.evaluate_maximally_mixed(m); });
}

// ---------------------------------------------------------------------------
// Werner-GHZ family

void WernerGhzParams::validate() const {
  if (n < 2) throw InvalidInput("Werner-GHZ state needs n >= 2, got " + std::to_string(n));
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidInput("Werner-GHZ weight mu = " + fmt(mu) + " is outside [0, 1]");
}

DensityMatrix ghz_state(int n) {
  if (n < 1) throw InvalidInput("GHZ state needs n >= 1");
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
  psi(0) = psi(d - 1) = 1.0 / std::numbers::sqrt2;
  return DensityMatrix::trusted(psi * psi.adjoint());
}

DensityMatrix werner_ghz_state(const WernerGhzParams& params) {
  params.validate();
  if (params.n > 24) throw SizeLimitExceeded("dense Werner-GHZ state limited to 24 qubits");
  const DensityMatrix ghz = ghz_state(params.n);
  const double d = static_cast<double>(ghz.dim());
  CMatrix rho = (1.0 - params.mu) / d * CMatrix::Identity(ghz.dim(), ghz.dim()) + params.mu * ghz.matrix();
  return DensityMatrix::trusted(std::move(rho));
}

Spectrum werner_ghz_spectrum(const WernerGhzParams& params) {
  params.validate();
  if (params.n > 24) throw SizeLimitExceeded("explicit Werner-GHZ spectrum limited to 24 qubits");
  const std::size_t d = std::size_t{1} << params.n;
  const double base = (1.0 - params.mu) / static_cast<double>(d);
  Spectrum s;
  s.eigenvalues.assign(d, base);
  s.eigenvalues[0] = base + params.mu;
  return s;
}

double gqd_werner_ghz(const WernerGhzParams& params) {
  params.validate();
  const double base = (1.0 - params.mu) / std::ldexp(1.0, params.n);
  const double value = xlog2x(base + params.mu) + xlog2x(base) - 2.0 * xlog2x(base + params.mu / 2.0);
  return std::max(value, 0.0);
}

double gqd_werner_ghz_asymptotic(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidInput("mu = " + fmt(mu) + " is outside [0, 1]");
  return mu;
}

// ---------------------------------------------------------------------------
// Pauli-diagonal family

std::string PauliValidation::message() const {
  std::string out;
  for (const auto& f : failures) {
    if (!out.empty()) out += "; ";
    out += f;
  }
  return out;
}

PauliValidation validate_pauli_params(const PauliDiagonalParams& p) {
  PauliValidation v;
  if (p.n < 2) {
    v.ok = false;
    v.failures.push_back("n = " + std::to_string(p.n) + " must be at least 2");
    return v;
  }
  if (!std::isfinite(p.c1) || !std::isfinite(p.c2) || !std::isfinite(p.c3)) {
    v.ok = false;
    v.failures.push_back("coefficients must be finite");
    return v;
  }
  v.odd = p.n % 2 != 0;
  v.d = std::sqrt(p.c1 * p.c1 + p.c2 * p.c2 + p.c3 * p.c3);
  if (v.odd) {
    if (v.d > 1.0 + 1e-12) {
      v.ok = false;
      v.failures.push_back("d = " + fmt(v.d) + " out of range [0,1]");
    }
    return v;
  }
  const double s = (p.n / 2) % 2 == 0 ? 1.0 : -1.0;
  v.lambda = {(1.0 + p.c3 + p.c1 + s * p.c2) / 4.0, (1.0 + p.c3 - p.c1 - s * p.c2) / 4.0,
              (1.0 - p.c3 + p.c1 - s * p.c2) / 4.0, (1.0 - p.c3 - p.c1 + s * p.c2) / 4.0};
  static constexpr const char* names[] = {"λ₁", "λ₂", "λ₃", "λ₄"};
  for (std::size_t j = 0; j < 4; ++j) {
    if (v.lambda[j] < -1e-12 || v.lambda[j] > 1.0 + 1e-12) {
      v.ok = false;
      v.failures.push_back(std::string(names[j]) + " = " + fmt(v.lambda[j]) + " out of range [0,1]");
    }
  }
  return v;
}

namespace {

PauliValidation require_valid(const PauliDiagonalParams& p) {
  PauliValidation v = validate_pauli_params(p);
  if (!v.ok) throw InvalidInput("invalid Pauli-diagonal coefficients: " + v.message());
  return v;
}

}  // namespace

DensityMatrix pauli_diagonal_state(const PauliDiagonalParams& params) {
  require_valid(params);
  if (params.n > 24) throw SizeLimitExceeded("dense Pauli-diagonal state limited to 24 qubits");
  const Eigen::Index d = Eigen::Index{1} << params.n;
  CMatrix rho = CMatrix::Identity(d, d) + params.c1 * pauli_string(Axis::x, params.n) +
                params.c2 * pauli_string(Axis::y, params.n) + params.c3 * pauli_string(Axis::z, params.n);
  rho /= static_cast<double>(d);
  return DensityMatrix::trusted(std::move(rho));
}

Spectrum pauli_diagonal_spectrum(const PauliDiagonalParams& params) {
  const PauliValidation v = require_valid(params);
  if (params.n > 24) throw SizeLimitExceeded("explicit Pauli-diagonal spectrum limited to 24 qubits");
  const double scale = std::ldexp(1.0, -params.n);
  Spectrum s;
  if (v.odd) {
    const std::size_t mult = std::size_t{1} << (params.n - 1);
    s.eigenvalues.insert(s.eigenvalues.end(), mult, (1.0 + v.d) * scale);
    s.eigenvalues.insert(s.eigenvalues.end(), mult, (1.0 - v.d) * scale);
  } else {
    const std::size_t mult = std::size_t{1} << (params.n - 2);
    for (double l : v.lambda) s.eigenvalues.insert(s.eigenvalues.end(), mult, 4.0 * l * scale);
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

double gqd_pauli_diagonal(const PauliDiagonalParams& params) {
  const PauliValidation v = require_valid(params);
  const double c = std::max({std::abs(params.c1), std::abs(params.c2), std::abs(params.c3)});
  const double f = binary_entropy(0.5 * (1.0 + c));
  double g = 0.0;
  if (v.odd) {
    g = binary_entropy(0.5 * (1.0 + std::min(v.d, 1.0)));
  } else {
    std::array<double, 4> lam = v.lambda;
    for (double& l : lam) l = std::clamp(l, 0.0, 1.0);
    g = shannon_entropy(lam) - 1.0;
  }
  return std::max(f - g, 0.0);
}

}  // namespace gqd
