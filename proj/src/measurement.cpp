#include "gqd/measurement.hpp"

#include "gqd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace gqd {

namespace {

std::vector<Mat2> bases(const LocalMeasurement& m) {
  std::vector<Mat2> out;
  out.reserve(m.directions.size());
  for (const auto& d : m.directions) out.push_back(measurement_basis(d));
  return out;
}

void require_match(const DensityMatrix& rho, const LocalMeasurement& m) {
  if (m.n_qubits() != rho.n_qubits()) {
    throw InvalidInput("measurement has " + std::to_string(m.n_qubits()) + " directions but the state has " +
                       std::to_string(rho.n_qubits()) + " qubits");
  }
}

double pinched_qubit_entropy(const Eigen::Vector3d& bloch, const BlochVector& dir) {
  const double proj = bloch.dot(dir.vec());
  return binary_entropy(0.5 * (1.0 + proj));
}

}  // namespace

LocalMeasurement LocalMeasurement::uniform(int n_qubits, const BlochVector& direction) {
  return {std::vector<BlochVector>(static_cast<std::size_t>(n_qubits), direction)};
}

LocalMeasurement LocalMeasurement::from_angles(std::span<const double> angles) {
  if (angles.size() % 2 != 0) throw InvalidInput("angle vector must hold (theta, phi) pairs");
  LocalMeasurement m;
  m.directions.reserve(angles.size() / 2);
  for (std::size_t i = 0; i < angles.size(); i += 2) {
    m.directions.push_back(BlochVector::from_angles(angles[i], angles[i + 1]));
  }
  return m;
}

std::pair<Mat2, Mat2> projectors(const BlochVector& direction) {
  const Mat2 s = direction.dot_sigma();
  return {0.5 * (Mat2::Identity() + s), 0.5 * (Mat2::Identity() - s)};
}

Mat2 measurement_basis(const BlochVector& direction) {
  const double theta = std::acos(std::clamp(direction.z(), -1.0, 1.0));
  const double phi = std::atan2(direction.y(), direction.x());
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, phi);
  Mat2 u;
  u << c, -std::conj(e) * s,
       e * s, c;
  return u;
}

DensityMatrix apply_local_measurement(const DensityMatrix& rho, const LocalMeasurement& m) {
  require_match(rho, m);
  const auto u = bases(m);
  return DensityMatrix::trusted(kernels::omp::pinch(rho.matrix(), u));
}

std::vector<double> outcome_distribution(const DensityMatrix& rho, const LocalMeasurement& m) {
  require_match(rho, m);
  const auto u = bases(m);
  return kernels::omp::rotated_diagonal(rho.matrix(), u);
}

DensityMatrix post_measurement_marginal(const DensityMatrix& rho, const LocalMeasurement& m, int qubit) {
  require_match(rho, m);
  if (qubit < 0 || qubit >= rho.n_qubits()) {
    throw InvalidInput("post_measurement_marginal: qubit index " + std::to_string(qubit) + " out of range");
  }
  const DensityMatrix reduced = marginal(rho, qubit);
  const auto [p0, p1] = projectors(m.directions[static_cast<std::size_t>(qubit)]);
  const CMatrix& r = reduced.matrix();
  return DensityMatrix::trusted(p0 * r * p0 + p1 * r * p1);
}

double measurement_objective(const DensityMatrix& rho, const LocalMeasurement& m) {
  const DensityMatrix measured = apply_local_measurement(rho, m);
  return mutual_information(rho) - mutual_information(measured);
}

double measurement_objective_relative(const DensityMatrix& rho, const LocalMeasurement& m) {
  const DensityMatrix measured = apply_local_measurement(rho, m);
  double value = relative_entropy(rho, measured).bits;
  for (int q = 0; q < rho.n_qubits(); ++q) {
    value -= relative_entropy(marginal(rho, q), post_measurement_marginal(rho, m, q)).bits;
  }
  return value;
}

// ---------------------------------------------------------------------------

MutualInformationLoss::MutualInformationLoss(const DensityMatrix& rho) : rho_(rho.matrix()), n_(rho.n_qubits()) {
  entropy_ = von_neumann_entropy(rho);
  double marginal_sum = 0.0;
  for (int q = 0; q < n_; ++q) {
    const DensityMatrix r = marginal(rho, q);
    const CMatrix& m = r.matrix();
    marginal_bloch_.emplace_back(2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real());
    marginal_sum += von_neumann_entropy(r);
  }
  mutual_information_ = marginal_sum - entropy_;
}

double MutualInformationLoss::evaluate(const LocalMeasurement& m) const {
  const auto u = bases(m);
  const auto probs = kernels::omp::rotated_diagonal(rho_, u);
  double after = -shannon_entropy(probs);
  for (int q = 0; q < n_; ++q) {
    after += pinched_qubit_entropy(marginal_bloch_[static_cast<std::size_t>(q)], m.directions[static_cast<std::size_t>(q)]);
  }
  return mutual_information_ - after;
}

double MutualInformationLoss::evaluate_maximally_mixed(const LocalMeasurement& m) const {
  const auto u = bases(m);
  const auto probs = kernels::omp::rotated_diagonal(rho_, u);
  return shannon_entropy(probs) - entropy_;
}

// ---------------------------------------------------------------------------

BlochVector canonical_direction(const BlochVector& d) {
  constexpr double eps = 1e-12;
  bool flip = false;
  if (std::abs(d.z()) > eps) {
    flip = d.z() < 0.0;
  } else if (std::abs(d.y()) > eps) {
    flip = d.y() < 0.0;
  } else {
    flip = d.x() < 0.0;
  }
  return flip ? -d : d;
}

LocalMeasurement canonicalize(const LocalMeasurement& m) {
  LocalMeasurement out;
  out.directions.reserve(m.directions.size());
  for (const auto& d : m.directions) out.directions.push_back(canonical_direction(d));
  return out;
}

}  // namespace gqd
