#include "gqd/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gqd {

namespace {

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

CMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  const CMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

Mat2 random_unitary2(Rng& rng) { return random_unitary(2, rng); }

DensityMatrix random_density_matrix(int n_qubits, Rng& rng) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  const CMatrix g = ginibre(d, d, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(rho);
}

BlochVector random_direction(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cos_theta = 2.0 * unit(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  return BlochVector::from_angles(std::acos(cos_theta), phi);
}

CMatrix random_qubit_state(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const BlochVector dir = random_direction(rng);
  const double radius = std::cbrt(unit(rng));
  return 0.5 * (Mat2::Identity() + radius * dir.dot_sigma());
}

CMatrix random_local_unitary(int n_qubits, Rng& rng) {
  CMatrix u = random_unitary2(rng);
  for (int q = 1; q < n_qubits; ++q) u = tensor_product(u, random_unitary2(rng));
  return u;
}

}  // namespace gqd

namespace gqd {

PauliDiagonalParams random_pauli_params(int n, Rng& rng, double margin) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (;;) {
    const PauliDiagonalParams p{n, coef(rng), coef(rng), coef(rng)};
    const auto v = validate_pauli_params(p);
    if (!v.ok) continue;
    if (v.odd ? v.d <= 1.0 - margin : *std::min_element(v.lambda.begin(), v.lambda.end()) >= margin) return p;
  }
}

}  // namespace gqd
