#pragma once

// Data-parallel kernels on dense 2^n x 2^n matrices.
//
// Every kernel comes in two flavours:
//   serial::  the direct definition (full Kronecker operators, explicit
//             projector or Kraus sums). Slow, obviously correct, kept as the
//             reference the OpenMP versions are tested and benchmarked against.
//   omp::     bit-indexed in-place algorithms parallelised with OpenMP. These
//             are what the library calls.

#include "gqd/qcore.hpp"

#include <span>
#include <vector>

namespace gqd::kernels {

/// Dimension below which the OpenMP kernels stay single-threaded.
inline constexpr Eigen::Index kParallelMinDim = 64;

namespace serial {

/// W^+ rho W with W = U_0 (x) U_1 (x) ... (x) U_{n-1}.
CMatrix local_conjugate(const CMatrix& rho, std::span<const Mat2> unitaries);

/// sum over outcome strings k of P_k rho P_k, P_k = (x)_i Pi_{k_i}(dirs[i]).
CMatrix pinch(const CMatrix& rho, std::span<const BlochVector> directions);

/// E0 rho E0^+ + E1 rho E1^+ with E0 = sqrt(1-p/2) I, E1 = sqrt(p/2) sigma_z
/// embedded on `qubit`.
CMatrix phase_damp(const CMatrix& rho, int qubit, double p);

/// sum_k (<k| (x) I) rho (|k> (x) I) over the traced qubits, built from
/// explicit basis-vector operators.
CMatrix partial_trace(const CMatrix& rho, std::span<const int> keep);

}  // namespace serial

namespace omp {

CMatrix local_conjugate(const CMatrix& rho, std::span<const Mat2> unitaries);

/// Diagonal of W^+ rho W (the outcome distribution of the product basis
/// spanned by the columns of the U_i), without forming the pinched matrix.
std::vector<double> rotated_diagonal(const CMatrix& rho, std::span<const Mat2> unitaries);

/// Pinching in the product basis given by `unitaries`: rotate, drop the
/// off-diagonal part, rotate back.
CMatrix pinch(const CMatrix& rho, std::span<const Mat2> unitaries);

CMatrix phase_damp(const CMatrix& rho, int qubit, double p);

CMatrix partial_trace(const CMatrix& rho, std::span<const int> keep);

}  // namespace omp

/// Qubit count of a 2^n dimensional matrix; throws InvalidInput otherwise.
int qubits_for_dim(Eigen::Index dim);

}  // namespace gqd::kernels
