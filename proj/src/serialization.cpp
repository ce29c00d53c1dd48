#include "gaussdistill/serialization.hpp"

#include "gaussdistill/errors.hpp"

namespace gaussdistill {

nlohmann::json cov_matrix_to_json(const CovMatrix& gamma) {
  const Matrix& m = gamma.entries();
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(m(i, j));
  }
  return {{"n_modes", gamma.n_modes()}, {"layout", gamma.layout().labels()}, {"entries", entries}};
}

CovMatrix cov_matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n_modes") || !doc.contains("entries")) {
    throw DomainError("covariance JSON: expected an object with n_modes and entries");
  }
  if (!doc["n_modes"].is_number_integer() || doc["n_modes"].get<long long>() < 1) {
    throw DomainError("covariance JSON: n_modes must be a positive integer");
  }
  const auto n_modes = doc["n_modes"].get<std::size_t>();
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  const auto& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionError("covariance JSON: entries must hold " + std::to_string(dim * dim) +
                         " numbers");
  }
  Matrix m(dim, dim);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j, ++k) {
      if (!entries[k].is_number()) throw DomainError("covariance JSON: non-numeric entry");
      m(i, j) = entries[k].get<double>();
    }
  }
  ModeLayout layout = ModeLayout::numbered(n_modes);
  if (doc.contains("layout")) {
    layout = ModeLayout(doc["layout"].get<std::vector<std::string>>());
    if (layout.size() != n_modes) {
      throw DimensionError("covariance JSON: layout length does not match n_modes");
    }
  }
  return CovMatrix(std::move(m), std::move(layout));
}

std::string dump_cov_matrix(const CovMatrix& gamma, int indent) {
  return cov_matrix_to_json(gamma).dump(indent);
}

CovMatrix parse_cov_matrix(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("covariance JSON: ") + e.what());
  }
  return cov_matrix_from_json(doc);
}

}  // namespace gaussdistill
