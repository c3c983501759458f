#pragma once

// State documents: JSON files describing either an explicit density matrix or
// one of the two parameterised families.
//
//   {"kind": "dense", "n": 2, "matrix": [[[re, im], ...], ...]}   (row-major)
//   {"kind": "werner_ghz", "n": 3, "mu": 0.5}
//   {"kind": "pauli_diagonal", "n": 2, "c1": 0.5, "c2": 0.1, "c3": 0.2}

#include "gqd/gqd.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace gqd {

using StateDocument = std::variant<DensityMatrix, WernerGhzParams, PauliDiagonalParams>;

/// Parses and validates; throws InvalidInput naming the failed check.
StateDocument parse_state_document(std::string_view text);
StateDocument load_state_document(const std::filesystem::path& path);

/// Serialises with 17 significant digits per number.
std::string to_json(const StateDocument& doc);
void save_state_document(const std::filesystem::path& path, const StateDocument& doc);

int document_qubits(const StateDocument& doc);
std::string_view document_kind(const StateDocument& doc);

/// Dense matrix for any document kind.
DensityMatrix materialize(const StateDocument& doc);

}  // namespace gqd
