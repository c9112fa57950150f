#pragma once

// JSON form of a matrix: {"dim": n, "rows": [[...], ...]} (row-major).

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "opmeans/symcore.hpp"

namespace opmeans {

using json = nlohmann::json;

inline constexpr double kStrictSymmetryRelTol = 1e-12;

/// Parses the matrix form. Asymmetric input is symmetrized, unless the
/// object carries "strict": true, in which case asymmetry beyond
/// 1e-12 * ||M|| is rejected with ParseError.
SymMatrix sym_matrix_from_json(const json& j);
GeneralMatrix general_matrix_from_json(const json& j);

json to_json(const SymMatrix& m);
json to_json(const GeneralMatrix& m);

SymMatrix read_sym_matrix(const std::filesystem::path& path);

}  // namespace opmeans
