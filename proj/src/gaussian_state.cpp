#include "gaussdistill/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <sstream>

#include "gaussdistill/errors.hpp"

namespace gaussdistill {

namespace {

void require_even_square(const Matrix& m, const char* where) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    std::ostringstream msg;
    msg << where << ": expected a non-empty square matrix of even size, got " << m.rows() << "x"
        << m.cols();
    throw DimensionError(msg.str());
  }
}

// c may sit on the purity bound up to roundoff in cosh/sinh evaluations.
constexpr double kParamSlack = 1e-12;

}  // namespace

ModeLayout::ModeLayout(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw DimensionError("ModeLayout: duplicate mode label '" + label + "'");
    }
  }
}

ModeLayout ModeLayout::numbered(std::size_t n_modes) {
  std::vector<std::string> labels;
  labels.reserve(n_modes);
  for (std::size_t i = 0; i < n_modes; ++i) labels.push_back("m" + std::to_string(i));
  return ModeLayout(std::move(labels));
}

std::size_t ModeLayout::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw DimensionError("ModeLayout: unknown mode label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

ModeIndices ModeLayout::indices_of(std::span<const std::string> labels) const {
  ModeIndices out;
  out.reserve(labels.size());
  for (const auto& label : labels) out.push_back(index_of(label));
  return out;
}

ModeLayout ModeLayout::subset(std::span<const std::size_t> indices) const {
  std::vector<std::string> labels;
  labels.reserve(indices.size());
  for (auto i : indices) {
    if (i >= labels_.size()) throw DimensionError("ModeLayout::subset: mode index out of range");
    labels.push_back(labels_[i]);
  }
  return ModeLayout(std::move(labels));
}

ModeLayout ModeLayout::concat(const ModeLayout& other) const {
  std::vector<std::string> labels = labels_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return ModeLayout(std::move(labels));
}

CovMatrix::CovMatrix(Matrix entries)
    : CovMatrix(std::move(entries), ModeLayout::numbered(0)) {}

CovMatrix::CovMatrix(Matrix entries, ModeLayout layout)
    : entries_(std::move(entries)), layout_(std::move(layout)) {
  require_even_square(entries_, "CovMatrix");
  const auto n_modes = static_cast<std::size_t>(entries_.rows() / 2);
  if (layout_.size() == 0) {
    layout_ = ModeLayout::numbered(n_modes);
  } else if (layout_.size() != n_modes) {
    throw DimensionError("CovMatrix: layout has " + std::to_string(layout_.size()) +
                         " labels for a " + std::to_string(n_modes) + "-mode matrix");
  }
  if (!entries_.allFinite()) throw DomainError("CovMatrix: entries must be finite");
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw DomainError("CovMatrix: matrix is not symmetric");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < entries_.cols(); ++j) {
      entries_(i, j) = entries_(j, i) = std::midpoint(entries_(i, j), entries_(j, i));
    }
  }
}

CovMatrix CovMatrix::vacuum(std::size_t n_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  return CovMatrix(Matrix::Identity(dim, dim), ModeLayout::numbered(n_modes));
}

Eigen::Matrix2d CovMatrix::block(std::size_t i, std::size_t j) const {
  if (i >= n_modes() || j >= n_modes()) throw DimensionError("CovMatrix::block: mode out of range");
  return entries_.block<2, 2>(2 * static_cast<Eigen::Index>(i), 2 * static_cast<Eigen::Index>(j));
}

double min_uncertainty_eigenvalue(const Matrix& gamma) {
  require_even_square(gamma, "min_uncertainty_eigenvalue");
  const Matrix sigma = symplectic_form(static_cast<int>(gamma.rows() / 2));
  Eigen::MatrixXcd h = gamma.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 1.0) * sigma.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("min_uncertainty_eigenvalue: eigen decomposition failed");
  }
  return solver.eigenvalues().minCoeff();
}

bool is_valid_covariance(const Matrix& gamma, double tol) {
  require_even_square(gamma, "is_valid_covariance");
  if (!gamma.allFinite()) return false;
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) return false;
  return min_uncertainty_eigenvalue(gamma) >= -tol;
}

bool is_valid_covariance(const CovMatrix& gamma, double tol) {
  return is_valid_covariance(gamma.entries(), tol);
}

SymmetricStateParams SymmetricStateParams::from_squeezing(double r) {
  return {std::cosh(2.0 * r), std::abs(std::sinh(2.0 * r))};
}

double SymmetricStateParams::c_max() const { return std::sqrt(std::max(0.0, a * a - 1.0)); }

void SymmetricStateParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(c)) {
    throw DomainError("symmetric state: a and c must be finite");
  }
  if (a < 1.0) {
    throw DomainError("symmetric state: bound a >= 1 violated (a = " + std::to_string(a) + ")");
  }
  if (c < 0.0) {
    throw DomainError("symmetric state: bound c >= 0 violated (c = " + std::to_string(c) + ")");
  }
  if (c > c_max() + kParamSlack * a) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "symmetric state: bound c <= sqrt(a^2 - 1) violated (c = " << c
        << ", sqrt(a^2 - 1) = " << c_max() << ")";
    throw DomainError(msg.str());
  }
}

bool SymmetricStateParams::is_pure() const { return std::abs(c - c_max()) <= kParamSlack * a; }

CovMatrix two_mode_symmetric(const SymmetricStateParams& params, ModeLayout layout) {
  params.validate();
  const double a = params.a;
  const double c = params.c;
  Matrix g(4, 4);
  g << a, 0, c, 0,
       0, a, 0, -c,
       c, 0, a, 0,
       0, -c, 0, a;
  return CovMatrix(std::move(g), std::move(layout));
}

CovMatrix direct_sum(const CovMatrix& first, const CovMatrix& second, ModeLayout layout) {
  const auto n1 = first.entries().rows();
  const auto n2 = second.entries().rows();
  if (layout.size() != first.n_modes() + second.n_modes()) {
    throw DimensionError("direct_sum: layout has " + std::to_string(layout.size()) +
                         " labels, expected " +
                         std::to_string(first.n_modes() + second.n_modes()));
  }
  Matrix out = Matrix::Zero(n1 + n2, n1 + n2);
  out.topLeftCorner(n1, n1) = first.entries();
  out.bottomRightCorner(n2, n2) = second.entries();
  return CovMatrix(std::move(out), std::move(layout));
}

CovMatrix direct_sum(const CovMatrix& first, const CovMatrix& second) {
  return direct_sum(first, second, first.layout().concat(second.layout()));
}

namespace {

void require_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) {
    throw DimensionError("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                         std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw DimensionError("invalid mode permutation");
    seen[p] = true;
  }
}

}  // namespace

ModeIndices inverse_permutation(std::span<const std::size_t> perm) {
  require_permutation(perm, perm.size());
  ModeIndices inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

std::vector<Eigen::Index> quadrature_indices(std::span<const std::size_t> modes) {
  std::vector<Eigen::Index> idx;
  idx.reserve(2 * modes.size());
  for (auto m : modes) {
    idx.push_back(2 * static_cast<Eigen::Index>(m));
    idx.push_back(2 * static_cast<Eigen::Index>(m) + 1);
  }
  return idx;
}

Matrix principal_submatrix(const Matrix& m, std::span<const Eigen::Index> indices) {
  const auto k = static_cast<Eigen::Index>(indices.size());
  Matrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = m(indices[i], indices[j]);
  }
  return out;
}

CovMatrix reorder_modes(const CovMatrix& gamma, std::span<const std::size_t> perm) {
  require_permutation(perm, gamma.n_modes());
  const auto idx = quadrature_indices(perm);
  return CovMatrix(principal_submatrix(gamma.entries(), idx), gamma.layout().subset(perm));
}

CovMatrix reorder_modes(const CovMatrix& gamma, std::span<const std::string> order) {
  const auto perm = gamma.layout().indices_of(order);
  return reorder_modes(gamma, perm);
}

CovMatrix apply_symplectic(const CovMatrix& gamma, const SymplecticMatrix& s) {
  if (s.matrix().rows() != gamma.entries().rows()) {
    throw DimensionError("apply_symplectic: " + std::to_string(s.n_modes()) +
                         "-mode symplectic on a " + std::to_string(gamma.n_modes()) +
                         "-mode state");
  }
  Matrix out = s.matrix() * gamma.entries() * s.matrix().transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return CovMatrix(std::move(out), gamma.layout());
}

CovMatrix partial_trace(const CovMatrix& gamma, std::span<const std::size_t> keep) {
  if (keep.empty()) throw DimensionError("partial_trace: kept mode set is empty");
  std::vector<bool> seen(gamma.n_modes(), false);
  for (auto m : keep) {
    if (m >= gamma.n_modes() || seen[m]) {
      throw DimensionError("partial_trace: invalid or repeated mode index " + std::to_string(m));
    }
    seen[m] = true;
  }
  const auto idx = quadrature_indices(keep);
  return CovMatrix(principal_submatrix(gamma.entries(), idx), gamma.layout().subset(keep));
}

}  // namespace gaussdistill
