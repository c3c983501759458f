#include "gqd/kernels.hpp"

#include "gqd/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>

namespace gqd::kernels {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw InvalidInput("matrix dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

namespace {

void require_square(const CMatrix& rho) {
  if (rho.rows() != rho.cols()) throw InvalidInput("kernel input is not square");
}

void require_count(const CMatrix& rho, std::size_t count) {
  require_square(rho);
  if (static_cast<int>(count) != qubits_for_dim(rho.rows())) {
    throw InvalidInput("number of local operators does not match the qubit count");
  }
}

CMatrix kron_any(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Sorted, deduplicated kept qubits and the complementary traced qubits.
void split_qubits(int n, std::span<const int> keep, std::vector<int>& kept, std::vector<int>& traced) {
  kept.assign(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) throw InvalidInput("partial_trace: keep set is empty");
  if (kept.front() < 0 || kept.back() >= n) throw InvalidInput("partial_trace: qubit index out of range");
  traced.clear();
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
}

/// Full-register index offsets for every basis state of a qubit subset.
std::vector<Eigen::Index> embed_offsets(int n, const std::vector<int>& subset) {
  const int m = static_cast<int>(subset.size());
  std::vector<Eigen::Index> out(std::size_t{1} << m, 0);
  for (std::size_t r = 0; r < out.size(); ++r) {
    Eigen::Index full = 0;
    for (int k = 0; k < m; ++k) {
      if ((r >> (m - 1 - k)) & 1U) full |= Eigen::Index{1} << (n - 1 - subset[k]);
    }
    out[r] = full;
  }
  return out;
}

bool go_parallel(Eigen::Index dim) { return dim >= kParallelMinDim && !omp_in_parallel(); }

/// rows <- A rows on the qubit at bit `bit`.
void apply_rows(CMatrix& m, const Mat2& a, int bit) {
  const Eigen::Index d = m.rows();
  const Eigen::Index mask = Eigen::Index{1} << bit;
#pragma omp parallel for schedule(static) if (go_parallel(d)) num_threads(parallel::max_threads())
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index i0 = 0; i0 < d; ++i0) {
      if (i0 & mask) continue;
      const Eigen::Index i1 = i0 | mask;
      const Complex r0 = m(i0, c);
      const Complex r1 = m(i1, c);
      m(i0, c) = a(0, 0) * r0 + a(0, 1) * r1;
      m(i1, c) = a(1, 0) * r0 + a(1, 1) * r1;
    }
  }
}

/// columns <- columns A on the qubit at bit `bit`.
void apply_cols(CMatrix& m, const Mat2& a, int bit) {
  const Eigen::Index d = m.rows();
  const Eigen::Index mask = Eigen::Index{1} << bit;
#pragma omp parallel for schedule(static) if (go_parallel(d)) num_threads(parallel::max_threads())
  for (Eigen::Index j0 = 0; j0 < d; ++j0) {
    if (j0 & mask) continue;
    const Eigen::Index j1 = j0 | mask;
    for (Eigen::Index r = 0; r < d; ++r) {
      const Complex c0 = m(r, j0);
      const Complex c1 = m(r, j1);
      m(r, j0) = c0 * a(0, 0) + c1 * a(1, 0);
      m(r, j1) = c0 * a(0, 1) + c1 * a(1, 1);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

namespace serial {

CMatrix local_conjugate(const CMatrix& rho, std::span<const Mat2> unitaries) {
  require_count(rho, unitaries.size());
  CMatrix w = unitaries[0];
  for (std::size_t q = 1; q < unitaries.size(); ++q) w = tensor_product(w, unitaries[q]);
  return w.adjoint() * rho * w;
}

CMatrix pinch(const CMatrix& rho, std::span<const BlochVector> directions) {
  require_count(rho, directions.size());
  const int n = static_cast<int>(directions.size());
  std::vector<std::array<Mat2, 2>> proj;
  for (const auto& v : directions) {
    const Mat2 s = v.dot_sigma();
    proj.push_back({0.5 * (Mat2::Identity() + s), 0.5 * (Mat2::Identity() - s)});
  }
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (std::size_t outcome = 0; outcome < (std::size_t{1} << n); ++outcome) {
    CMatrix p = proj[0][(outcome >> (n - 1)) & 1U];
    for (int q = 1; q < n; ++q) p = tensor_product(p, proj[q][(outcome >> (n - 1 - q)) & 1U]);
    out += p * rho * p;
  }
  return out;
}

CMatrix phase_damp(const CMatrix& rho, int qubit, double p) {
  require_square(rho);
  const int n = qubits_for_dim(rho.rows());
  if (qubit < 0 || qubit >= n) throw InvalidInput("phase_damp: qubit index out of range");
  CMatrix z_embedded = CMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    z_embedded = tensor_product(z_embedded, q == qubit ? CMatrix(pauli(Axis::z)) : CMatrix(Mat2::Identity()));
  }
  const CMatrix e0 = std::sqrt(1.0 - p / 2.0) * CMatrix::Identity(rho.rows(), rho.cols());
  const CMatrix e1 = std::sqrt(p / 2.0) * z_embedded;
  return e0 * rho * e0.adjoint() + e1 * rho * e1.adjoint();
}

CMatrix partial_trace(const CMatrix& rho, std::span<const int> keep) {
  require_square(rho);
  const int n = qubits_for_dim(rho.rows());
  std::vector<int> kept, traced;
  split_qubits(n, keep, kept, traced);
  const Eigen::Index dk = Eigen::Index{1} << kept.size();
  CMatrix out = CMatrix::Zero(dk, dk);
  const std::size_t nt = traced.size();
  for (std::size_t t = 0; t < (std::size_t{1} << nt); ++t) {
    CMatrix b = CMatrix::Identity(1, 1);
    std::size_t tpos = 0;
    for (int q = 0; q < n; ++q) {
      if (tpos < nt && traced[tpos] == q) {
        CMatrix ket = CMatrix::Zero(2, 1);
        ket((t >> (nt - 1 - tpos)) & 1U, 0) = 1.0;
        b = kron_any(b, ket);
        ++tpos;
      } else {
        b = kron_any(b, CMatrix::Identity(2, 2));
      }
    }
    out += b.adjoint() * rho * b;
  }
  return out;
}

}  // namespace serial

// ---------------------------------------------------------------------------

namespace omp {

CMatrix local_conjugate(const CMatrix& rho, std::span<const Mat2> unitaries) {
  require_count(rho, unitaries.size());
  const int n = static_cast<int>(unitaries.size());
  CMatrix m = rho;
  for (int q = 0; q < n; ++q) {
    const int bit = n - 1 - q;
    apply_rows(m, unitaries[q].adjoint(), bit);
    apply_cols(m, unitaries[q], bit);
  }
  return m;
}

std::vector<double> rotated_diagonal(const CMatrix& rho, std::span<const Mat2> unitaries) {
  const CMatrix m = local_conjugate(rho, unitaries);
  std::vector<double> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 0; k < m.rows(); ++k) out[static_cast<std::size_t>(k)] = m(k, k).real();
  return out;
}

CMatrix pinch(const CMatrix& rho, std::span<const Mat2> unitaries) {
  const CMatrix rotated = local_conjugate(rho, unitaries);
  CMatrix diag = CMatrix::Zero(rotated.rows(), rotated.cols());
  for (Eigen::Index k = 0; k < rotated.rows(); ++k) diag(k, k) = rotated(k, k);
  std::vector<Mat2> back(unitaries.size());
  std::transform(unitaries.begin(), unitaries.end(), back.begin(), [](const Mat2& u) { return Mat2(u.adjoint()); });
  return local_conjugate(diag, back);
}

CMatrix phase_damp(const CMatrix& rho, int qubit, double p) {
  require_square(rho);
  const int n = qubits_for_dim(rho.rows());
  if (qubit < 0 || qubit >= n) throw InvalidInput("phase_damp: qubit index out of range");
  const Eigen::Index d = rho.rows();
  const Eigen::Index mask = Eigen::Index{1} << (n - 1 - qubit);
  const double shrink = 1.0 - p;
  CMatrix out = rho;
#pragma omp parallel for schedule(static) if (go_parallel(d)) num_threads(parallel::max_threads())
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      if ((r ^ c) & mask) out(r, c) *= shrink;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& rho, std::span<const int> keep) {
  require_square(rho);
  const int n = qubits_for_dim(rho.rows());
  std::vector<int> kept, traced;
  split_qubits(n, keep, kept, traced);
  const auto keep_off = embed_offsets(n, kept);
  const auto trace_off = embed_offsets(n, traced);
  const Eigen::Index dk = static_cast<Eigen::Index>(keep_off.size());
  CMatrix out(dk, dk);
#pragma omp parallel for schedule(static) if (go_parallel(rho.rows())) num_threads(parallel::max_threads())
  for (Eigen::Index c = 0; c < dk; ++c) {
    for (Eigen::Index r = 0; r < dk; ++r) {
      Complex acc = 0.0;
      for (Eigen::Index t : trace_off) acc += rho(keep_off[r] | t, keep_off[c] | t);
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace omp

}  // namespace gqd::kernels
