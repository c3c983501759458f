#pragma once

// Dense complex linear algebra and entropy primitives for N-qubit states.
//
// Conventions used throughout the library:
//   * qubit 0 is the slowest-varying tensor factor, i.e. qubit q sits on bit
//     (n - 1 - q) of a basis index;
//   * all logarithms are base 2, so entropies and GQD values are in bits;
//   * 0 log 0 = 0, and eigenvalues in [-1e-9, 0) are clipped to zero.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqd {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using RMat3 = Eigen::Matrix3d;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-9;
inline constexpr double kUnitNorm = 1e-12;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kProbabilitySum = 1e-9;
}  // namespace tol

/// Largest qubit count handled with dense matrices unless overridden.
inline constexpr int kDefaultDenseLimit = 12;

/// Invalid physical input: bad state, bad parameters, malformed documents.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense computation requested beyond the configured qubit limit.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axis { x, y, z };

Axis parse_axis(char axis);
char axis_name(Axis axis);

/// Unit vector in R^3 labelling a single-qubit observable r.sigma.
class BlochVector {
 public:
  /// Throws InvalidInput unless x^2+y^2+z^2 = 1 within 1e-12.
  BlochVector(double x, double y, double z);

  /// Rescales an arbitrary nonzero vector onto the sphere.
  static BlochVector normalized(double x, double y, double z);
  /// Polar angle theta from +z, azimuth phi from +x.
  static BlochVector from_angles(double theta, double phi);
  static BlochVector axis(Axis a);

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  Eigen::Vector3d vec() const { return {x_, y_, z_}; }

  /// r.sigma as a 2x2 matrix.
  Mat2 dot_sigma() const;

  BlochVector operator-() const { return {-x_, -y_, -z_, Trusted{}}; }

 private:
  struct Trusted {};
  BlochVector(double x, double y, double z, Trusted) : x_(x), y_(y), z_(z) {}
  double x_, y_, z_;
};

/// Eigenvalues sorted in descending order.
struct Spectrum {
  std::vector<double> eigenvalues;

  double sum() const;
};

/// Hermitian, unit-trace, positive-semidefinite matrix of dimension 2^n.
/// Immutable once constructed.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-10), trace (1e-10) and PSD (-1e-9); throws
  /// InvalidInput naming the first failed invariant.
  explicit DensityMatrix(CMatrix entries);

  /// Skips the eigenvalue-based validation. Only for outputs of maps that
  /// preserve validity by construction (partial trace, channels, pinching).
  static DensityMatrix trusted(CMatrix entries);

  static DensityMatrix maximally_mixed(int n_qubits);
  /// |psi><psi| for a normalised state vector.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const CMatrix& matrix() const { return entries_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  struct Unchecked {};
  DensityMatrix(CMatrix entries, Unchecked);

  CMatrix entries_;
  int n_qubits_ = 0;
};

/// Kronecker product; a's index varies slowest.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
CMatrix tensor_power(const CMatrix& a, int n);

Mat2 pauli(Axis axis);
/// sigma_axis^{(x)n}.
CMatrix pauli_string(Axis axis, int n);
CMatrix pauli_string(char axis, int n);

/// Reduced state on `keep` (a set; order and duplicates are ignored).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);
/// Single-qubit marginal rho_{A_q}.
DensityMatrix marginal(const DensityMatrix& rho, int qubit);

Spectrum spectrum(const DensityMatrix& rho);
Spectrum hermitian_spectrum(const CMatrix& h);

/// -sum p log2 p with the clipping convention above. Throws InvalidInput on
/// entries below -1e-9.
double shannon_entropy(std::span<const double> probabilities);
/// Binary entropy H2(x).
double binary_entropy(double x);

double von_neumann_entropy(const DensityMatrix& rho);

struct RelativeEntropy {
  double bits = 0.0;
  /// supp(rho) is not contained in supp(sigma); the divergence is +infinity
  /// and `bits` holds infinity.
  bool support_violation = false;
};

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sum_i S(rho_{A_i}) - S(rho). Requires n >= 2.
double mutual_information(const DensityMatrix& rho);

/// f(H) for Hermitian H through its eigendecomposition.
CMatrix spectral_function(const CMatrix& h, const std::function<double(double)>& f);

/// SO(3) image of a 2x2 unitary: U (r.sigma) U^+ = (R r).sigma.
RMat3 bloch_rotation(const Mat2& u);

/// True when q majorizes p: sorted descending, every partial sum of q is at
/// least the matching partial sum of p. Shorter vectors are zero-padded.
bool majorizes(std::span<const double> p, std::span<const double> q);

/// Keeps the diagonal and zeroes everything else.
CMatrix diagonal_pinch(const CMatrix& a);

/// Largest absolute entry, used for residual reporting.
double max_abs(const CMatrix& a);

}  // namespace gqd
