#pragma once

#include <string>

#include <json.hpp>

#include "gaussdistill/gaussian_state.hpp"

namespace gaussdistill {

/// {"n_modes": n, "layout": [labels...], "entries": [row-major 2n*2n numbers]}.
/// Doubles are written with round-trip precision.
nlohmann::json cov_matrix_to_json(const CovMatrix& gamma);

/// Inverse of cov_matrix_to_json. Throws DimensionError / DomainError on a
/// malformed document (wrong entry count, non-numeric entries, asymmetry).
CovMatrix cov_matrix_from_json(const nlohmann::json& doc);

std::string dump_cov_matrix(const CovMatrix& gamma, int indent = -1);
CovMatrix parse_cov_matrix(const std::string& text);

}  // namespace gaussdistill
