#pragma once

// Local projective measurements on N qubits and the dephasing (pinching)
// channel they induce.

#include "gqd/qcore.hpp"

#include <utility>
#include <vector>

namespace gqd {

/// One unit Bloch direction per qubit; qubit i is measured with the
/// projectors (I +/- n_i.sigma)/2.
struct LocalMeasurement {
  std::vector<BlochVector> directions;

  int n_qubits() const { return static_cast<int>(directions.size()); }

  static LocalMeasurement uniform(int n_qubits, const BlochVector& direction);
  /// Directions from 2N angles laid out as (theta_0, phi_0, theta_1, ...).
  static LocalMeasurement from_angles(std::span<const double> angles);
};

/// (Pi_0, Pi_1) = ((I + n.sigma)/2, (I - n.sigma)/2).
std::pair<Mat2, Mat2> projectors(const BlochVector& direction);

/// Unitary whose first column spans the +1 eigenvector of n.sigma and second
/// column the -1 eigenvector, so U sigma_z U^+ = n.sigma.
Mat2 measurement_basis(const BlochVector& direction);

/// Phi(rho) = sum_k P_k rho P_k over all 2^N outcome strings.
DensityMatrix apply_local_measurement(const DensityMatrix& rho, const LocalMeasurement& m);

/// Outcome probabilities p(k) = tr(P_k rho), k read with qubit 0 as the
/// most significant bit. These are also the eigenvalues of Phi(rho).
std::vector<double> outcome_distribution(const DensityMatrix& rho, const LocalMeasurement& m);

/// Phi_{A_j}(rho_{A_j}).
DensityMatrix post_measurement_marginal(const DensityMatrix& rho, const LocalMeasurement& m, int qubit);

/// I(rho) - I(Phi(rho)), evaluated from explicit entropies of rho, Phi(rho)
/// and their marginals.
double measurement_objective(const DensityMatrix& rho, const LocalMeasurement& m);

/// S(rho || Phi(rho)) - sum_j S(rho_{A_j} || Phi_{A_j}(rho_{A_j})); equal to
/// measurement_objective for every measurement.
double measurement_objective_relative(const DensityMatrix& rho, const LocalMeasurement& m);

/// Fast evaluator of the information-loss objective for repeated use inside
/// the optimizer. S(rho) and the marginal Bloch vectors are computed once;
/// each call costs one local rotation of rho. Thread-safe for concurrent
/// evaluate() calls.
class MutualInformationLoss {
 public:
  explicit MutualInformationLoss(const DensityMatrix& rho);

  /// I(rho) - I(Phi(rho)).
  double evaluate(const LocalMeasurement& m) const;
  /// S(Phi(rho)) - S(rho); the objective when every marginal is I/2.
  double evaluate_maximally_mixed(const LocalMeasurement& m) const;

  double entropy() const { return entropy_; }
  double mutual_information() const { return mutual_information_; }

 private:
  CMatrix rho_;
  int n_ = 0;
  double entropy_ = 0.0;
  double mutual_information_ = 0.0;
  std::vector<Eigen::Vector3d> marginal_bloch_;
};

/// +/-n give the same projector pair; picks the sign with z > 0, then y > 0,
/// then x > 0.
BlochVector canonical_direction(const BlochVector& direction);
LocalMeasurement canonicalize(const LocalMeasurement& m);

}  // namespace gqd
