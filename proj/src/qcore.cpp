#include "gqd/qcore.hpp"

#include "gqd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace gqd {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

Axis parse_axis(char axis) {
  switch (axis) {
    case 'x': case 'X': return Axis::x;
    case 'y': case 'Y': return Axis::y;
    case 'z': case 'Z': return Axis::z;
    default: throw InvalidInput(std::string("invalid Pauli axis '") + axis + "'");
  }
}

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::x: return 'x';
    case Axis::y: return 'y';
    case Axis::z: return 'z';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// BlochVector

BlochVector::BlochVector(double x, double y, double z) : x_(x), y_(y), z_(z) {
  const double norm2 = x * x + y * y + z * z;
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tol::kUnitNorm) {
    throw InvalidInput("Bloch vector is not unit length: |r|^2 = " + fmt_double(norm2));
  }
}

BlochVector BlochVector::normalized(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidInput("cannot normalise a zero Bloch vector");
  return {x / norm, y / norm, z / norm, Trusted{}};
}

BlochVector BlochVector::from_angles(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta), Trusted{}};
}

BlochVector BlochVector::axis(Axis a) {
  switch (a) {
    case Axis::x: return {1.0, 0.0, 0.0, Trusted{}};
    case Axis::y: return {0.0, 1.0, 0.0, Trusted{}};
    case Axis::z: break;
  }
  return {0.0, 0.0, 1.0, Trusted{}};
}

Mat2 BlochVector::dot_sigma() const {
  Mat2 m;
  m << Complex(z_, 0.0), Complex(x_, -y_),
       Complex(x_, y_), Complex(-z_, 0.0);
  return m;
}

double Spectrum::sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(CMatrix entries, Unchecked) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw InvalidInput("density matrix is not square");
  n_qubits_ = kernels::qubits_for_dim(entries_.rows());
}

DensityMatrix::DensityMatrix(CMatrix entries) : DensityMatrix(std::move(entries), Unchecked{}) {
  if (!entries_.allFinite()) throw InvalidInput("density matrix has non-finite entries");
  const double herm = max_abs(entries_ - entries_.adjoint());
  if (herm > tol::kHermitian) {
    throw InvalidInput("density matrix is not Hermitian: max |rho - rho^+| = " + fmt_double(herm));
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw InvalidInput("density matrix trace is " + fmt_double(tr.real()) + ", expected 1");
  }
  // Symmetrise away the sub-tolerance anti-Hermitian residue.
  entries_ = (0.5 * (entries_ + entries_.adjoint())).eval();
  const Spectrum spec = hermitian_spectrum(entries_);
  const double smallest = spec.eigenvalues.back();
  if (smallest < -tol::kPsd) {
    throw InvalidInput("density matrix is not positive semidefinite: smallest eigenvalue " +
                       fmt_double(smallest));
  }
}

DensityMatrix DensityMatrix::trusted(CMatrix entries) { return DensityMatrix(std::move(entries), Unchecked{}); }

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1) throw InvalidInput("qubit count must be positive");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return trusted(CMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) throw InvalidInput("state vector is not normalised");
  return DensityMatrix(psi * psi.adjoint());
}

// ---------------------------------------------------------------------------
// Operators

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) throw InvalidInput("tensor_product expects square matrices");
  const Eigen::Index da = a.rows();
  const Eigen::Index db = b.rows();
  CMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix tensor_power(const CMatrix& a, int n) {
  if (n < 1) throw InvalidInput("tensor power must be at least 1");
  CMatrix out = a;
  for (int k = 1; k < n; ++k) out = tensor_product(out, a);
  return out;
}

Mat2 pauli(Axis axis) {
  Mat2 m;
  switch (axis) {
    case Axis::x: m << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::y: m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0; break;
    case Axis::z: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

CMatrix pauli_string(Axis axis, int n) {
  if (n < 1) throw InvalidInput("Pauli string length must be at least 1");
  // sigma^{(x)n} is a signed permutation: x and y flip every bit, z is diagonal.
  const Eigen::Index d = Eigen::Index{1} << n;
  CMatrix out = CMatrix::Zero(d, d);
  const Mat2 s = pauli(axis);
  for (Eigen::Index col = 0; col < d; ++col) {
    const Eigen::Index row = axis == Axis::z ? col : (d - 1 - col);
    Complex v = 1.0;
    for (int q = 0; q < n; ++q) {
      const int b = static_cast<int>((col >> (n - 1 - q)) & 1);
      const int r = static_cast<int>((row >> (n - 1 - q)) & 1);
      v *= s(r, b);
    }
    out(row, col) = v;
  }
  return out;
}

CMatrix pauli_string(char axis, int n) { return pauli_string(parse_axis(axis), n); }

// ---------------------------------------------------------------------------
// Reduced states

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) throw InvalidInput("partial_trace: keep set is empty");
  for (int q : keep) {
    if (q < 0 || q >= rho.n_qubits()) {
      throw InvalidInput("partial_trace: qubit index " + std::to_string(q) + " out of range");
    }
  }
  // `keep` is a set: order it and reject repeats.
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("partial_trace: repeated qubit index in keep set");
  }
  return DensityMatrix::trusted(kernels::omp::partial_trace(rho.matrix(), sorted));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix marginal(const DensityMatrix& rho, int qubit) {
  const int keep[] = {qubit};
  return partial_trace(rho, keep);
}

// ---------------------------------------------------------------------------
// Spectra and entropies

Spectrum hermitian_spectrum(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  Spectrum out;
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

Spectrum spectrum(const DensityMatrix& rho) { return hermitian_spectrum(rho.matrix()); }

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p < -tol::kPsd) throw InvalidInput("negative probability/eigenvalue " + fmt_double(p));
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double binary_entropy(double x) {
  const double pair[] = {x, 1.0 - x};
  return shannon_entropy(pair);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Spectrum s = spectrum(rho);
  return shannon_entropy(s.eigenvalues);
}

CMatrix spectral_function(const CMatrix& h, const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  const Eigen::VectorXd ev = solver.eigenvalues().unaryExpr(f);
  const CMatrix& v = solver.eigenvectors();
  return v * ev.cast<Complex>().asDiagonal() * v.adjoint();
}

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidInput("relative_entropy: dimension mismatch");
  constexpr double kKernel = 1e-12;
  constexpr double kLeak = 1e-10;

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sigma.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  const Eigen::VectorXd& lam = solver.eigenvalues();
  const CMatrix& v = solver.eigenvectors();
  // tr(rho log sigma) = sum_k log(lambda_k) <v_k|rho|v_k>
  const CMatrix rotated = v.adjoint() * rho.matrix() * v;
  double cross = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    const double weight = rotated(k, k).real();
    if (lam(k) <= kKernel) {
      if (weight > kLeak) return {std::numeric_limits<double>::infinity(), true};
      continue;
    }
    cross += weight * std::log2(lam(k));
  }
  const double value = -von_neumann_entropy(rho) - cross;
  return {value, false};
}

double mutual_information(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  if (n < 2) throw InvalidInput("mutual_information needs at least two qubits");
  double total = -von_neumann_entropy(rho);
  for (int q = 0; q < n; ++q) total += von_neumann_entropy(marginal(rho, q));
  return total;
}

// ---------------------------------------------------------------------------
// Rotations, majorization, pinching

RMat3 bloch_rotation(const Mat2& u) {
  const double dev = max_abs(u * u.adjoint() - Mat2::Identity());
  if (dev > tol::kUnitary) throw InvalidInput("bloch_rotation: matrix is not unitary (residual " + fmt_double(dev) + ")");
  const Mat2 sig[3] = {pauli(Axis::x), pauli(Axis::y), pauli(Axis::z)};
  RMat3 r;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      r(j, k) = 0.5 * (sig[j] * u * sig[k] * u.adjoint()).trace().real();
    }
  }
  return r;
}

bool majorizes(std::span<const double> p, std::span<const double> q) {
  auto prepare = [](std::span<const double> v, std::size_t len, const char* name) {
    std::vector<double> out(v.begin(), v.end());
    double total = 0.0;
    for (double x : out) {
      if (x < 0.0) throw InvalidInput(std::string("majorizes: negative entry in ") + name);
      total += x;
    }
    if (std::abs(total - 1.0) > tol::kProbabilitySum) {
      throw InvalidInput(std::string("majorizes: ") + name + " does not sum to 1");
    }
    out.resize(len, 0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  };
  const std::size_t len = std::max(p.size(), q.size());
  const auto ps = prepare(p, len, "p");
  const auto qs = prepare(q, len, "q");
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    sp += ps[k];
    sq += qs[k];
    if (sq < sp - 1e-12) return false;
  }
  return true;
}

CMatrix diagonal_pinch(const CMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("diagonal_pinch expects a square matrix");
  CMatrix out = CMatrix::Zero(a.rows(), a.cols());
  out.diagonal() = a.diagonal();
  return out;
}

double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace gqd
