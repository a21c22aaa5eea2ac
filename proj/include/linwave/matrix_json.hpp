#pragma once

#include <json.hpp>

#include "linwave/sym_matrix.hpp"

namespace linwave {

/// Serializes a matrix as
///   {"rows": R, "cols": C, "entries": [[term, ...], ...]}
/// where `entries` lists the R*C entries in row-major order and each entry is
/// the list of Laurent terms of that SymScalar:
///   {"exp": [mu_m, mu_omega, mu_hbar], "re": ["a","b","c","d"], "im": [...]}
/// with rational coordinates of (1, sqrt2, sqrt3, sqrt6) as "p/q" strings.
nlohmann::json matrix_to_json(const SymMatrix& m);

/// Inverse of matrix_to_json; throws std::invalid_argument on malformed input.
SymMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace linwave
