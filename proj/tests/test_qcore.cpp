#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gqd/gqd.hpp"
#include "gqd/qcore.hpp"
#include "gqd/random_states.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace gqd;

namespace {

CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix diag(std::initializer_list<double> v) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("tensor_product basics") {
  const CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(max_abs(tensor_product(i2, i2) - CMatrix::Identity(4, 4)) == 0.0);
  CHECK(max_abs(tensor_product(pauli(Axis::z), pauli(Axis::z)) - diag({1, -1, -1, 1})) == 0.0);

  CMatrix anti = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) anti(i, 3 - i) = 1.0;
  CHECK(max_abs(tensor_product(pauli(Axis::x), pauli(Axis::x)) - anti) == 0.0);

  Rng rng(3);
  const CMatrix a = random_unitary(3, rng), b = random_unitary(2, rng);
  CHECK(max_abs(tensor_product(a, b) - oracle::kron(a, b)) < 1e-15);
  CHECK_THROWS_AS(tensor_product(CMatrix::Zero(2, 3), i2), InvalidInput);
}

TEST_CASE("pauli_string") {
  CHECK(max_abs(pauli_string('z', 1) - diag({1, -1})) == 0.0);
  CHECK(max_abs(pauli_string('z', 2) - diag({1, -1, -1, 1})) == 0.0);

  const CMatrix yy = pauli_string(Axis::y, 2);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  CHECK(max_abs(yy - expected) == 0.0);
  CHECK(max_abs(yy * yy - CMatrix::Identity(4, 4)) == 0.0);

  for (int n = 1; n <= 5; ++n) {
    CHECK(max_abs(pauli_string('x', n) - oracle::power(oracle::sx(), n)) == 0.0);
    CHECK(max_abs(pauli_string('y', n) - oracle::power(oracle::sy(), n)) == 0.0);
    CHECK(max_abs(pauli_string('z', n) - oracle::power(oracle::sz(), n)) == 0.0);
  }
  CHECK_THROWS_AS(pauli_string('w', 2), InvalidInput);
  CHECK_THROWS_AS(pauli_string('x', 0), InvalidInput);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_NOTHROW(DensityMatrix(diag({0.5, 0.5})));
  CHECK_THROWS_AS(DensityMatrix(diag({0.6, 0.5})), InvalidInput);       // trace
  CHECK_THROWS_AS(DensityMatrix(diag({1.2, -0.2})), InvalidInput);      // not PSD
  CHECK_THROWS_AS(DensityMatrix(m2(0.5, 0.1, 0.2, 0.5)), InvalidInput);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix(diag({0.25, 0.25, 0.5})), InvalidInput); // not 2^n
  CHECK_THROWS_AS(DensityMatrix(diag({std::nan(""), 1.0})), InvalidInput);
  // Round-off sized negative eigenvalue is tolerated.
  CHECK_NOTHROW(DensityMatrix(diag({1.0 + 5e-10, -5e-10})));
}

TEST_CASE("BlochVector requires unit length") {
  CHECK_NOTHROW(BlochVector(0, 0, 1));
  CHECK_THROWS_AS(BlochVector(0, 0, 0.9), InvalidInput);
  const auto v = BlochVector::from_angles(M_PI / 2, M_PI / 2);
  CHECK(v.y() == doctest::Approx(1.0));
  const auto w = BlochVector::normalized(1, 1, 0);
  CHECK(w.x() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("partial_trace") {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0;  // |0>|1>
  const DensityMatrix prod = DensityMatrix::pure(psi);
  CHECK(max_abs(partial_trace(prod, {0}).matrix() - diag({1, 0})) < 1e-15);
  CHECK(max_abs(partial_trace(prod, {1}).matrix() - diag({0, 1})) < 1e-15);

  for (int n = 2; n <= 6; ++n) {
    const DensityMatrix ghz = ghz_state(n);
    for (int q = 0; q < n; ++q) CHECK(max_abs(marginal(ghz, q).matrix() - 0.5 * CMatrix::Identity(2, 2)) < 1e-15);
  }

  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_density_matrix(4, rng);
    CHECK(max_abs(partial_trace(rho, {0, 1, 2, 3}).matrix() - rho.matrix()) == 0.0);
    for (const std::vector<int>& keep : {std::vector<int>{0}, {3}, {1, 2}, {0, 3}, {0, 1, 3}}) {
      CHECK(max_abs(partial_trace(rho, keep).matrix() - oracle::partial_trace(rho.matrix(), 4, keep)) < 1e-14);
    }
  }
  const DensityMatrix rho = random_density_matrix(2, rng);
  CHECK_THROWS_AS(partial_trace(rho, {2}), InvalidInput);
  CHECK_THROWS_AS(partial_trace(rho, {1, 1}), InvalidInput);
}

TEST_CASE("von_neumann_entropy") {
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(1)) == doctest::Approx(1.0).epsilon(1e-14));
  for (int n = 1; n <= 5; ++n) CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(n)) == doctest::Approx(n));
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(8);
  zero(0) = 1.0;
  CHECK(std::abs(von_neumann_entropy(DensityMatrix::pure(zero))) < 1e-12);

  // Frozen: {0.625, 0.125 x3}.
  CHECK(std::abs(von_neumann_entropy(werner_ghz_state({2, 0.5})) - 1.5487949406953987) < 1e-12);

  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_density_matrix(3, rng);
    const CMatrix u = random_unitary(8, rng);
    const DensityMatrix rot(u * rho.matrix() * u.adjoint());
    CHECK(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(rot)) < 1e-9);
    CHECK(std::abs(von_neumann_entropy(rho) - oracle::entropy(rho.matrix())) < 1e-10);
  }
}

TEST_CASE("eigendecomposition round trip") {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density_matrix(3, rng);
    const CMatrix back = spectral_function(rho.matrix(), [](double x) { return x; });
    CHECK((back - rho.matrix()).norm() < 1e-9);
  }
}

TEST_CASE("shannon entropy conventions") {
  const std::vector<double> with_zero = {0.5, 0.5, 0.0};
  CHECK(shannon_entropy(with_zero) == doctest::Approx(1.0));
  const std::vector<double> tiny_negative = {1.0, -5e-10};
  CHECK(shannon_entropy(tiny_negative) == doctest::Approx(0.0));
  const std::vector<double> negative = {1.1, -0.1};
  CHECK_THROWS_AS(shannon_entropy(negative), InvalidInput);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
}

TEST_CASE("relative_entropy") {
  Rng rng(13);
  const DensityMatrix rho = random_density_matrix(2, rng);
  CHECK(std::abs(relative_entropy(rho, rho).bits) < 1e-10);

  for (int n : {2, 3}) {
    const DensityMatrix r = random_density_matrix(n, rng);
    CMatrix prod = CMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) prod = tensor_product(prod, marginal(r, q).matrix());
    const auto s = relative_entropy(r, DensityMatrix(prod));
    CHECK_FALSE(s.support_violation);
    CHECK(std::abs(s.bits - mutual_information(r)) < 1e-9);
    CHECK(std::abs(s.bits - oracle::mutual_information(r.matrix(), n)) < 1e-9);
  }

  // Pinching: S(rho || Phi rho) = S(Phi rho) - S(rho).
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix r = random_density_matrix(2, rng);
    const std::vector<std::array<double, 3>> dirs = {{0, 0, 1}, {1, 0, 0}};
    const DensityMatrix phi(oracle::pinch(r.matrix(), dirs));
    CHECK(std::abs(relative_entropy(r, phi).bits - (von_neumann_entropy(phi) - von_neumann_entropy(r))) < 1e-9);
  }

  // Support of rho outside the support of sigma.
  const DensityMatrix zero(diag({1, 0}));
  const DensityMatrix one(diag({0, 1}));
  const auto inf = relative_entropy(zero, one);
  CHECK(inf.support_violation);
  CHECK(std::isinf(inf.bits));
}

TEST_CASE("mutual_information") {
  Rng rng(17);
  CMatrix prod = CMatrix::Identity(1, 1);
  for (int q = 0; q < 3; ++q) prod = tensor_product(prod, random_density_matrix(1, rng).matrix());
  CHECK(std::abs(mutual_information(DensityMatrix(prod))) < 1e-10);
  for (int n = 2; n <= 5; ++n) CHECK(mutual_information(ghz_state(n)) == doctest::Approx(n).epsilon(1e-12));
  CHECK(std::abs(mutual_information(DensityMatrix::maximally_mixed(3))) < 1e-12);
  CHECK_THROWS_AS(mutual_information(DensityMatrix::maximally_mixed(1)), InvalidInput);
}

TEST_CASE("bloch_rotation") {
  CHECK((bloch_rotation(Mat2::Identity()) - RMat3::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  RMat3 flip = RMat3::Zero();
  flip.diagonal() << 1, -1, -1;
  CHECK((bloch_rotation(pauli(Axis::x)) - flip).cwiseAbs().maxCoeff() < 1e-15);

  Rng rng(19);
  for (int t = 0; t < 100; ++t) {
    const Mat2 u = random_unitary2(rng);
    const RMat3 r = bloch_rotation(u);
    const BlochVector v = random_direction(rng);
    const Eigen::Vector3d rv = r * v.vec();
    const CMatrix lhs = u * v.dot_sigma() * u.adjoint();
    const CMatrix rhs = rv(0) * oracle::sx() + rv(1) * oracle::sy() + rv(2) * oracle::sz();
    CHECK(max_abs(lhs - rhs) < 1e-9);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-9);
    CHECK((r.transpose() * r - RMat3::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK_THROWS_AS(bloch_rotation(Mat2::Identity() * 2.0), InvalidInput);
}

TEST_CASE("majorizes") {
  const std::vector<double> point = {1, 0, 0, 0};
  const std::vector<double> uniform = {0.25, 0.25, 0.25, 0.25};
  const std::vector<double> half = {0.5, 0.5, 0, 0};
  CHECK(majorizes(uniform, point));
  CHECK(majorizes(half, point));
  CHECK(majorizes(uniform, uniform));
  CHECK(majorizes(uniform, half));
  CHECK_FALSE(majorizes(half, uniform));
  CHECK(shannon_entropy(uniform) == doctest::Approx(2.0));
  CHECK(shannon_entropy(half) == doctest::Approx(1.0));

  // Different lengths are zero-padded.
  const std::vector<double> two = {0.5, 0.5};
  CHECK(majorizes(uniform, two));

  const std::vector<double> bad = {0.5, 0.6};
  CHECK_THROWS_AS(majorizes(bad, two), InvalidInput);
}

TEST_CASE("majorization lowers entropy (property)") {
  Rng rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int pairs = 0;
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> p(4), q(4);
    double sp = 0, sq = 0;
    for (int i = 0; i < 4; ++i) sp += (p[i] = u(rng)), sq += (q[i] = u(rng) * u(rng));
    for (int i = 0; i < 4; ++i) p[i] /= sp, q[i] /= sq;
    if (majorizes(p, q)) {
      ++pairs;
      CHECK(shannon_entropy(p) >= shannon_entropy(q) - 1e-12);
    }
  }
  CHECK(pairs > 50);
}

TEST_CASE("diagonal_pinch") {
  const CMatrix d = diag({0.3, 0.7});
  CHECK(max_abs(diagonal_pinch(d) - d) == 0.0);
  CHECK(max_abs(diagonal_pinch(pauli(Axis::x))) == 0.0);

  // tr(A B) = tr(Phi(A) B) for diagonal B, with random A.
  Rng rng(29);
  for (int t = 0; t < 100; ++t) {
    const CMatrix a = random_unitary(4, rng) * 3.0;
    const CMatrix b = diagonal_pinch(random_unitary(4, rng));
    CHECK(std::abs((a * b).trace() - (diagonal_pinch(a) * b).trace()) < 1e-12);
  }
}

TEST_CASE("log of product state splits per qubit") {
  Rng rng(31);
  auto log2m = [](const CMatrix& h) { return spectral_function(h, [](double x) { return std::log2(x); }); };
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 2;
    const DensityMatrix rho = random_density_matrix(n, rng);
    CMatrix prod = CMatrix::Identity(1, 1);
    double rhs = 0.0;
    for (int q = 0; q < n; ++q) {
      const DensityMatrix s = random_density_matrix(1, rng);
      prod = tensor_product(prod, s.matrix());
      rhs += (marginal(rho, q).matrix() * log2m(s.matrix())).trace().real();
    }
    CHECK(std::abs((rho.matrix() * log2m(prod)).trace().real() - rhs) < 1e-9);
  }
}
