#include "gqd/verify.hpp"

#include "gqd/dynamics.hpp"
#include "gqd/measurement.hpp"
#include "gqd/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gqd {

namespace {

struct Tracker {
  CheckResult r;

  Tracker(std::string name, double tolerance) {
    r.name = std::move(name);
    r.tolerance = tolerance;
    r.passed = true;
  }
  void observe(double residual) {
    ++r.trials;
    if (!(residual <= r.tolerance)) r.passed = false;
    if (!(residual <= r.worst)) r.worst = residual;
  }
  CheckResult done() { return std::move(r); }
};

CMatrix random_complex(Eigen::Index d, Rng& rng) {
  std::normal_distribution<double> normal;
  CMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const double re = normal(rng);
      m(i, j) = Complex(re, normal(rng));
    }
  }
  return m;
}

// Pinching in the orthonormal basis given by the columns of v.
CMatrix pinch_in(const CMatrix& v, const CMatrix& x) {
  return v * diagonal_pinch(v.adjoint() * x * v) * v.adjoint();
}

CMatrix log2m(const CMatrix& h) {
  return spectral_function(h, [](double x) { return std::log2(x); });
}

// --- lemma checks ----------------------------------------------------------

CheckResult pinching_trace(int trials, Rng& rng) {
  Tracker t("pinching trace tr(A Φ(B)) = tr(Φ(A) Φ(B))", 1e-9);
  std::uniform_int_distribution<int> dims(2, 8);
  for (int k = 0; k < trials; ++k) {
    const Eigen::Index d = dims(rng);
    const CMatrix a = random_complex(d, rng);
    const CMatrix b = random_complex(d, rng);
    const CMatrix v = random_unitary(d, rng);
    const CMatrix bbar = pinch_in(v, b);
    t.observe(std::abs((a * bbar).trace() - (pinch_in(v, a) * bbar).trace()));
  }
  return t.done();
}

CheckResult pinching_function(int trials, Rng& rng) {
  Tracker t("pinching under f: tr(A f(Φ(B))) = tr(Φ(A) f(Φ(B)))", 1e-9);
  std::uniform_int_distribution<int> dims(2, 8);
  for (int k = 0; k < trials; ++k) {
    const Eigen::Index d = dims(rng);
    const CMatrix a = random_complex(d, rng);
    const CMatrix b = random_complex(d, rng);
    const CMatrix v = random_unitary(d, rng);
    // f acts on the eigenvalues of the pinched Hermitian part of b.
    const CMatrix h = pinch_in(v, 0.5 * (b + b.adjoint()));
    const CMatrix fb = spectral_function(h, [](double x) { return std::exp(0.5 * x) + std::sin(x); });
    t.observe(std::abs((a * fb).trace() - (pinch_in(v, a) * fb).trace()));
  }
  return t.done();
}

CheckResult log_of_product(int trials, Rng& rng) {
  Tracker t("log of product: tr[ρ log(⊗σ_i)] = Σ tr[ρ_i log σ_i]", 1e-9);
  for (int k = 0; k < trials; ++k) {
    const int n = 2 + k % 2;
    const DensityMatrix rho = random_density_matrix(n, rng);
    CMatrix product = CMatrix::Identity(1, 1);
    double rhs = 0.0;
    for (int q = 0; q < n; ++q) {
      const CMatrix sigma = random_density_matrix(1, rng).matrix();
      product = tensor_product(product, sigma);
      rhs += (marginal(rho, q).matrix() * log2m(sigma)).trace().real();
    }
    const double lhs = (rho.matrix() * log2m(product)).trace().real();
    t.observe(std::abs(lhs - rhs));
  }
  return t.done();
}

CheckResult su2_homomorphism(int trials, Rng& rng) {
  Tracker t("SU(2)→SO(3): U(r·σ)U⁺ = (Rr)·σ, det R = 1", 1e-9);
  for (int k = 0; k < trials; ++k) {
    const Mat2 u = random_unitary2(rng);
    const RMat3 r = bloch_rotation(u);
    const BlochVector dir = random_direction(rng);
    const Eigen::Vector3d rotated = r * dir.vec();
    const Mat2 lhs = u * dir.dot_sigma() * u.adjoint();
    Mat2 rhs = rotated.x() * pauli(Axis::x) + rotated.y() * pauli(Axis::y) + rotated.z() * pauli(Axis::z);
    t.observe(std::max(max_abs(lhs - rhs), std::abs(r.determinant() - 1.0)));
  }
  return t.done();
}

std::vector<double> random_probabilities(std::size_t len, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(len);
  for (double& x : p) x = e(rng);
  const double s = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& x : p) x /= s;
  return p;
}

CheckResult majorization_monotone(int trials, Rng& rng) {
  Tracker t("majorization: q ≻ p ⇒ H(p) ≥ H(q)", 1e-12);
  std::uniform_int_distribution<int> lens(2, 8);
  int pairs = 0;
  for (int k = 0; k < trials; ++k) {
    const auto len = static_cast<std::size_t>(lens(rng));
    const auto p = random_probabilities(len, rng);
    // A transfer from a poorer to a richer entry always yields a majorizing q.
    std::vector<double> q = p;
    std::sort(q.begin(), q.end(), std::greater<>());
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    const std::size_t lo = len - 1;
    const double moved = frac(rng) * q[lo];
    q[0] += moved;
    q[lo] -= moved;
    for (const auto& [a, b] : {std::pair{p, q}, std::pair{q, p}, std::pair{p, random_probabilities(len, rng)}}) {
      if (majorizes(a, b)) {
        ++pairs;
        t.observe(std::max(0.0, shannon_entropy(b) - shannon_entropy(a)));
      }
    }
  }
  auto r = t.done();
  r.detail = std::to_string(pairs) + " majorizing pairs";
  if (pairs == 0) r.passed = false;
  return r;
}

// --- theorem checks --------------------------------------------------------

CheckResult objective_forms(int trials, Rng& rng) {
  Tracker t("relative-entropy form = mutual-information form", 1e-9);
  for (int k = 0; k < trials; ++k) {
    const int n = 2 + k % 2;
    const DensityMatrix rho = random_density_matrix(n, rng);
    LocalMeasurement m;
    for (int q = 0; q < n; ++q) m.directions.push_back(random_direction(rng));
    const double mi = measurement_objective(rho, m);
    const double re = measurement_objective_relative(rho, m);
    const double fast = MutualInformationLoss(rho).evaluate(m);
    t.observe(std::max(std::abs(mi - re), std::abs(mi - fast)));
  }
  return t.done();
}

CheckResult maximally_mixed_shortcut(const OptimizerOptions& opt, Rng& rng) {
  Tracker t("maximally mixed marginals shortcut = full minimum", 1e-6);
  std::vector<DensityMatrix> states;
  for (int n : {2, 3}) {
    for (double mu : {0.3, 0.8}) states.push_back(werner_ghz_state({n, mu}));
    states.push_back(pauli_diagonal_state(random_pauli_params(n, rng, 0.02)));
  }
  for (const auto& rho : states) {
    t.observe(std::abs(gqd_maximally_mixed(rho, opt).value - gqd_numeric(rho, opt).value));
  }
  return t.done();
}

CheckResult werner_agreement(const OptimizerOptions& opt) {
  Tracker t("Werner-GHZ closed form = numeric", 1e-4);
  for (int n : {2, 3}) {
    for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      t.observe(std::abs(gqd_numeric(werner_ghz_state({n, mu}), opt).value - gqd_werner_ghz({n, mu})));
    }
  }
  return t.done();
}

CheckResult werner_endpoints() {
  Tracker t("Werner-GHZ closed form D(0)=0, D(1)=1", 1e-9);
  for (int n = 2; n <= 64; ++n) {
    t.observe(std::abs(gqd_werner_ghz({n, 0.0})));
    t.observe(std::abs(gqd_werner_ghz({n, 1.0}) - 1.0));
  }
  return t.done();
}

CheckResult pauli_agreement(int per_n, const OptimizerOptions& opt, Rng& rng) {
  Tracker t("Pauli-diagonal closed form = numeric", 1e-4);
  for (int n : {2, 3, 4}) {
    for (int k = 0; k < per_n; ++k) {
      const auto p = random_pauli_params(n, rng);
      t.observe(std::abs(gqd_numeric(pauli_diagonal_state(p), opt).value - gqd_pauli_diagonal(p)));
    }
  }
  return t.done();
}

CheckResult cross_family() {
  Tracker t("werner(2, μ) = pauli(2, (μ,-μ,μ))", 1e-12);
  for (int i = 0; i <= 20; ++i) {
    const double mu = 0.05 * i;
    t.observe(std::abs(gqd_werner_ghz({2, mu}) - gqd_pauli_diagonal({2, mu, -mu, mu})));
  }
  return t.done();
}

CheckResult large_n_deviation(int n, double bound) {
  Tracker t("large-N approach max|D_N - μ| at N=" + std::to_string(n), bound);
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double mu = i / 100.0;
    worst = std::max(worst, std::abs(gqd_werner_ghz({n, mu}) - gqd_werner_ghz_asymptotic(mu)));
  }
  // Strict inequality: a deviation equal to the bound fails.
  t.observe(worst < bound ? worst : std::nextafter(bound, 2.0 * bound));
  return t.done();
}

CheckResult transition_detection() {
  Tracker t("sudden transition detected iff 0<|c3|<max(|c1|,|c2|)", 0.0);
  const auto grid = uniform_grid(101);
  const double step = grid[1] - grid[0];
  const PauliDiagonalParams cases[] = {{2, 0.5, 0.1, 0.2}, {3, 0.5, 0.1, 0.2}, {2, 0.4, 0.2, 0.0},
                                       {2, 0.3, 0.1, 0.3}, {2, 0.2, 0.1, 0.5}};
  for (const auto& p : cases) {
    const Scan s = scan_gqd_vs_p(p, grid);
    const auto& predicted = s.report.predicted_transition;
    double miss = 0.0;
    if (predicted.has_value() != !s.report.kinks.empty()) {
      miss = 1.0;
    } else if (predicted) {
      miss = s.report.kinks.size() == 1 && std::abs(s.report.kinks[0].p - *predicted) <= step + 1e-12 ? 0.0 : 1.0;
    }
    t.observe(miss);
  }
  return t.done();
}

CheckResult freeze_plateau() {
  Tracker t("frozen GQD on p∈[0.01,0.39] for N=2 c=(1,-0.6,0.6)", 1e-9);
  const double frozen = 1.0 - binary_entropy(0.8);
  const auto grid = uniform_grid(101);
  const Scan s = scan_gqd_vs_p({2, 1.0, -0.6, 0.6}, grid);
  for (const auto& rec : s.records) {
    if (rec.p >= 0.01 - 1e-12 && rec.p <= 0.39 + 1e-12) t.observe(std::abs(rec.gqd - frozen));
  }
  return t.done();
}

}  // namespace

VerifyScope parse_verify_scope(const std::string& scope) {
  if (scope == "lemmas") return VerifyScope::lemmas;
  if (scope == "theorems") return VerifyScope::theorems;
  if (scope == "all") return VerifyScope::all;
  throw InvalidInput("unknown verify scope \"" + scope + "\" (expected lemmas, theorems or all)");
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw InvalidInput("trials must be positive");
  Rng rng(options.seed);
  std::vector<CheckResult> out;
  const bool lemmas = options.scope != VerifyScope::theorems;
  const bool theorems = options.scope != VerifyScope::lemmas;
  if (lemmas) {
    out.push_back(pinching_trace(options.trials, rng));
    out.push_back(pinching_function(options.trials, rng));
    out.push_back(log_of_product(options.trials, rng));
    out.push_back(su2_homomorphism(options.trials, rng));
    out.push_back(majorization_monotone(options.trials, rng));
  }
  if (theorems) {
    OptimizerOptions opt = options.optimizer;
    opt.seed = options.seed;
    out.push_back(objective_forms(options.trials, rng));
    out.push_back(maximally_mixed_shortcut(opt, rng));
    out.push_back(werner_agreement(opt));
    out.push_back(werner_endpoints());
    out.push_back(pauli_agreement(std::min(options.trials, 20), opt, rng));
    out.push_back(cross_family());
    out.push_back(large_n_deviation(10, 1e-2));
    out.push_back(large_n_deviation(14, 1e-3));
    out.push_back(large_n_deviation(17, 1e-4));
    out.push_back(transition_detection());
    out.push_back(freeze_plateau());
  }
  return out;
}

}  // namespace gqd
