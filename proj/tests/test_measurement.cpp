#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gqd/gqd.hpp"
#include "gqd/measurement.hpp"
#include "gqd/random_states.hpp"
#include "oracles.hpp"

using namespace gqd;

namespace {

std::vector<std::array<double, 3>> arrays(const LocalMeasurement& m) {
  std::vector<std::array<double, 3>> out;
  for (const auto& d : m.directions) out.push_back({d.x(), d.y(), d.z()});
  return out;
}

LocalMeasurement random_measurement(int n, Rng& rng) {
  LocalMeasurement m;
  for (int q = 0; q < n; ++q) m.directions.push_back(random_direction(rng));
  return m;
}

}  // namespace

TEST_CASE("projectors") {
  const auto [p0, p1] = projectors(BlochVector(0, 0, 1));
  CMatrix e0 = CMatrix::Zero(2, 2), e1 = CMatrix::Zero(2, 2);
  e0(0, 0) = 1;
  e1(1, 1) = 1;
  CHECK(max_abs(p0 - e0) < 1e-15);
  CHECK(max_abs(p1 - e1) < 1e-15);

  const auto [px, mx] = projectors(BlochVector(1, 0, 0));
  CMatrix plus = CMatrix::Constant(2, 2, 0.5), minus = CMatrix::Constant(2, 2, 0.5);
  minus(0, 1) = minus(1, 0) = -0.5;
  CHECK(max_abs(px - plus) < 1e-15);
  CHECK(max_abs(mx - minus) < 1e-15);

  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto [a, b] = projectors(random_direction(rng));
    CHECK(max_abs(a * a - a) < 1e-12);
    CHECK(max_abs(b * b - b) < 1e-12);
    CHECK(max_abs(a + b - Mat2::Identity()) < 1e-12);
    CHECK(max_abs(a * b) < 1e-12);
  }
}

TEST_CASE("measurement_basis rotates sigma_z onto n.sigma") {
  Rng rng(43);
  for (int t = 0; t < 50; ++t) {
    const BlochVector n = random_direction(rng);
    const Mat2 u = measurement_basis(n);
    CHECK(max_abs(u * pauli(Axis::z) * u.adjoint() - n.dot_sigma()) < 1e-12);
    CHECK(max_abs(u.adjoint() * u - Mat2::Identity()) < 1e-12);
  }
}

TEST_CASE("apply_local_measurement") {
  Rng rng(47);
  // A diagonal state is a fixed point of the all-z measurement.
  CMatrix d = CMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) d(i, i) = (i + 1) / 36.0;
  const DensityMatrix classical(d);
  const auto z3 = LocalMeasurement::uniform(3, BlochVector(0, 0, 1));
  CHECK(max_abs(apply_local_measurement(classical, z3).matrix() - d) < 1e-15);

  // GHZ loses its coherences.
  for (int n = 2; n <= 5; ++n) {
    const int dim = 1 << n;
    CMatrix expected = CMatrix::Zero(dim, dim);
    expected(0, 0) = expected(dim - 1, dim - 1) = 0.5;
    CHECK(max_abs(apply_local_measurement(ghz_state(n), LocalMeasurement::uniform(n, BlochVector(0, 0, 1))).matrix() -
                  expected) < 1e-14);
  }

  // Single qubit: the measured sigma_x is alpha (n.sigma) for n = (alpha, beta, gamma).
  for (int t = 0; t < 20; ++t) {
    const BlochVector n = random_direction(rng);
    const auto [p0, p1] = projectors(n);
    const Mat2 measured_x = p0 * pauli(Axis::x) * p0 + p1 * pauli(Axis::x) * p1;
    const Mat2 measured_y = p0 * pauli(Axis::y) * p0 + p1 * pauli(Axis::y) * p1;
    const Mat2 measured_z = p0 * pauli(Axis::z) * p0 + p1 * pauli(Axis::z) * p1;
    CHECK(max_abs(measured_x - n.x() * n.dot_sigma()) < 1e-12);
    CHECK(max_abs(measured_y - n.y() * n.dot_sigma()) < 1e-12);
    CHECK(max_abs(measured_z - n.z() * n.dot_sigma()) < 1e-12);
  }

  for (int n = 1; n <= 4; ++n) {
    const DensityMatrix rho = random_density_matrix(n, rng);
    const LocalMeasurement m = random_measurement(n, rng);
    const DensityMatrix phi = apply_local_measurement(rho, m);
    CHECK(max_abs(phi.matrix() - oracle::pinch(rho.matrix(), arrays(m))) < 1e-13);
    // Idempotent.
    CHECK((apply_local_measurement(phi, m).matrix() - phi.matrix()).norm() < 1e-12);
    // Outcome distribution = eigenvalues of Phi(rho).
    auto probs = outcome_distribution(rho, m);
    auto eig = oracle::eigenvalues(phi.matrix());
    std::sort(probs.begin(), probs.end());
    std::sort(eig.begin(), eig.end());
    for (std::size_t i = 0; i < probs.size(); ++i) CHECK(std::abs(probs[i] - eig[i]) < 1e-12);
  }

  CHECK_THROWS_AS(apply_local_measurement(random_density_matrix(2, rng), random_measurement(3, rng)), InvalidInput);
}

TEST_CASE("post_measurement_marginal") {
  Rng rng(53);
  const LocalMeasurement m = random_measurement(3, rng);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
  for (int q = 0; q < 3; ++q)
    CHECK(max_abs(post_measurement_marginal(mixed, m, q).matrix() - 0.5 * CMatrix::Identity(2, 2)) < 1e-14);

  CMatrix r = CMatrix::Zero(2, 2);
  r(0, 0) = 0.75;
  r(1, 1) = 0.25;
  const DensityMatrix two(tensor_product(r, r));
  const auto z = LocalMeasurement::uniform(2, BlochVector(0, 0, 1));
  CHECK(max_abs(post_measurement_marginal(two, z, 1).matrix() - r) < 1e-14);

  // Measuring then tracing = tracing then measuring the qubit alone.
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density_matrix(2, rng);
    const LocalMeasurement mm = random_measurement(2, rng);
    for (int q = 0; q < 2; ++q) {
      const DensityMatrix via_full = marginal(apply_local_measurement(rho, mm), q);
      const CMatrix via_marginal = oracle::pinch(marginal(rho, q).matrix(), {arrays(mm)[static_cast<std::size_t>(q)]});
      CHECK(max_abs(via_full.matrix() - via_marginal) < 1e-10);
      CHECK(max_abs(post_measurement_marginal(rho, mm, q).matrix() - via_marginal) < 1e-10);
    }
  }
  CHECK_THROWS_AS(post_measurement_marginal(mixed, m, 3), InvalidInput);
}

TEST_CASE("measurement_objective") {
  Rng rng(59);
  CMatrix d = CMatrix::Zero(4, 4);
  d(0, 0) = 0.1, d(1, 1) = 0.2, d(2, 2) = 0.3, d(3, 3) = 0.4;
  const auto z2 = LocalMeasurement::uniform(2, BlochVector(0, 0, 1));
  CHECK(std::abs(measurement_objective(DensityMatrix(d), z2)) < 1e-12);

  CHECK(std::abs(measurement_objective(ghz_state(2), z2) - 1.0) < 1e-12);
  CHECK(std::abs(mutual_information(ghz_state(2)) - 2.0) < 1e-12);

  // Both objective forms, the fast evaluator and the oracle agree; all >= 0.
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 2;
    const DensityMatrix rho = random_density_matrix(n, rng);
    const LocalMeasurement m = random_measurement(n, rng);
    const double a = measurement_objective(rho, m);
    const double b = measurement_objective_relative(rho, m);
    const double c = MutualInformationLoss(rho).evaluate(m);
    CHECK(std::abs(a - b) < 1e-9);
    CHECK(std::abs(a - c) < 1e-9);
    CHECK(std::abs(a - oracle::objective(rho.matrix(), arrays(m))) < 1e-9);
    CHECK(a >= -1e-9);
  }
}

TEST_CASE("maximally mixed evaluator") {
  Rng rng(61);
  for (double mu : {0.2, 0.7}) {
    const DensityMatrix rho = werner_ghz_state({3, mu});
    const MutualInformationLoss loss(rho);
    for (int t = 0; t < 10; ++t) {
      const LocalMeasurement m = random_measurement(3, rng);
      CHECK(std::abs(loss.evaluate(m) - loss.evaluate_maximally_mixed(m)) < 1e-10);
    }
  }
}

TEST_CASE("canonical directions") {
  CHECK(canonical_direction(BlochVector(0, 0, -1)).z() == 1.0);
  const auto v = canonical_direction(BlochVector(0, -1, 0));
  CHECK(v.y() == 1.0);
  const auto w = canonical_direction(BlochVector(-1, 0, 0));
  CHECK(w.x() == 1.0);
  const auto s = BlochVector::normalized(0.3, -0.4, -0.5);
  CHECK(canonical_direction(s).z() > 0.0);
  CHECK(canonical_direction(s).x() == doctest::Approx(-s.x()));

  Rng rng(67);
  // +n and -n give the same channel.
  const DensityMatrix rho = random_density_matrix(2, rng);
  LocalMeasurement m = random_measurement(2, rng);
  const LocalMeasurement c = canonicalize(m);
  CHECK(max_abs(apply_local_measurement(rho, m).matrix() - apply_local_measurement(rho, c).matrix()) < 1e-13);
}
