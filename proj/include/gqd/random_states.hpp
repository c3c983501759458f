#pragma once

// Seeded generators for randomised checks (verify command, tests).

#include "gqd/qcore.hpp"

#include <cstdint>
#include <random>

namespace gqd {

using Rng = std::mt19937_64;

/// Haar-random d x d unitary (QR of a complex Ginibre matrix, phases fixed).
CMatrix random_unitary(Eigen::Index dim, Rng& rng);
Mat2 random_unitary2(Rng& rng);

/// Full-rank random state G G^+ / tr(G G^+) on n qubits.
DensityMatrix random_density_matrix(int n_qubits, Rng& rng);

/// Uniform direction on the sphere.
BlochVector random_direction(Rng& rng);

/// Random single-qubit state (point in the Bloch ball).
CMatrix random_qubit_state(Rng& rng);

/// (x) U_i over n qubits with Haar-random factors.
CMatrix random_local_unitary(int n_qubits, Rng& rng);

}  // namespace gqd

#include "gqd/gqd.hpp"

namespace gqd {

/// Uniform rejection sample of valid Pauli-diagonal coefficients whose
/// validity constraints hold with slack `margin` (every lambda >= margin for
/// even n, d <= 1 - margin for odd n).
PauliDiagonalParams random_pauli_params(int n, Rng& rng, double margin = 0.0);

}  // namespace gqd
