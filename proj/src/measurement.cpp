#include "gaussdistill/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussdistill/errors.hpp"

namespace gaussdistill {

ProjectionTarget::ProjectionTarget(double squeezing) : d(squeezing) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw DomainError("ProjectionTarget: d must be finite and > 0, got " + std::to_string(d));
  }
}

Matrix ProjectionTarget::covariance() const {
  return Eigen::Vector4d(1.0 / d, d, 1.0 / d, d).asDiagonal();
}

Matrix ProjectionTarget::measured_block_shift() const {
  const Matrix dd = covariance();
  return dd * dd;
}

Matrix BlockPartition::reassemble() const {
  const auto k = kept_block.rows();
  const auto m = measured_block.rows();
  Matrix out(k + m, k + m);
  out.topLeftCorner(k, k) = kept_block;
  out.topRightCorner(k, m) = cross_block;
  out.bottomLeftCorner(m, k) = cross_block.transpose();
  out.bottomRightCorner(m, m) = measured_block;
  return out;
}

namespace {

Matrix gather(const Matrix& m, std::span<const Eigen::Index> rows,
              std::span<const Eigen::Index> cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
    }
  }
  return out;
}

CovMatrix schur_result(const BlockPartition& parts, const Matrix& correction) {
  Matrix out = parts.kept_block - correction;
  out = 0.5 * (out + out.transpose()).eval();
  return CovMatrix(std::move(out), parts.kept_layout);
}

}  // namespace

BlockPartition block_split(const CovMatrix& gamma, std::span<const std::size_t> kept,
                           std::span<const std::size_t> measured) {
  const std::size_t n = gamma.n_modes();
  std::vector<int> owner(n, 0);
  for (auto m : kept) {
    if (m >= n || owner[m] != 0) throw DimensionError("block_split: invalid or repeated kept mode");
    owner[m] = 1;
  }
  for (auto m : measured) {
    if (m >= n || owner[m] != 0) {
      throw DimensionError("block_split: measured mode overlaps kept modes or is invalid");
    }
    owner[m] = 2;
  }
  if (kept.size() + measured.size() != n) {
    throw DimensionError("block_split: kept and measured modes do not cover the state");
  }
  const auto ki = quadrature_indices(kept);
  const auto mi = quadrature_indices(measured);
  const Matrix& g = gamma.entries();
  return BlockPartition{gather(g, ki, ki), gather(g, mi, mi), gather(g, ki, mi),
                        gamma.layout().subset(kept), gamma.layout().subset(measured)};
}

ModeIndices complement_modes(const CovMatrix& gamma, std::span<const std::size_t> measured) {
  std::vector<bool> is_measured(gamma.n_modes(), false);
  for (auto m : measured) {
    if (m >= gamma.n_modes()) throw DimensionError("measured mode index out of range");
    is_measured[m] = true;
  }
  ModeIndices kept;
  for (std::size_t i = 0; i < gamma.n_modes(); ++i) {
    if (!is_measured[i]) kept.push_back(i);
  }
  if (kept.empty()) throw DimensionError("measurement would leave no modes");
  return kept;
}

CovMatrix project_pure_gaussian(const CovMatrix& gamma, std::span<const std::size_t> measured,
                                const ProjectionTarget& target) {
  if (measured.size() != 2) {
    throw DimensionError("project_pure_gaussian: the target state covers exactly 2 modes, got " +
                         std::to_string(measured.size()));
  }
  const auto kept = complement_modes(gamma, measured);
  const BlockPartition parts = block_split(gamma, kept, measured);
  const Matrix shifted = parts.measured_block + target.measured_block_shift();
  Eigen::LLT<Matrix> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("project_pure_gaussian: C2 + D_d^2 is not positive definite");
  }
  const Matrix solved = llt.solve(parts.cross_block.transpose());
  return schur_result(parts, parts.cross_block * solved);
}

Matrix quadrature_projector(const HomodyneMask& mask) {
  const auto dim = static_cast<Eigen::Index>(2 * mask.size());
  Matrix pi = Matrix::Zero(dim, dim);
  for (std::size_t k = 0; k < mask.size(); ++k) {
    const auto i = 2 * static_cast<Eigen::Index>(k) + (mask[k] == Quadrature::X ? 0 : 1);
    pi(i, i) = 1.0;
  }
  return pi;
}

CovMatrix homodyne(const CovMatrix& gamma, std::span<const std::size_t> measured,
                   const HomodyneMask& mask) {
  if (measured.empty()) throw DimensionError("homodyne: no measured modes");
  if (mask.size() != measured.size()) {
    throw DimensionError("homodyne: mask has " + std::to_string(mask.size()) +
                         " entries for " + std::to_string(measured.size()) + " measured modes");
  }
  const auto kept = complement_modes(gamma, measured);
  const BlockPartition parts = block_split(gamma, kept, measured);

  std::vector<Eigen::Index> support;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    support.push_back(2 * static_cast<Eigen::Index>(k) + (mask[k] == Quadrature::X ? 0 : 1));
  }
  const Matrix restricted = principal_submatrix(parts.measured_block, support);
  Eigen::LLT<Matrix> llt(restricted);
  if (llt.info() != Eigen::Success || !(llt.rcond() > kRankTol)) {
    throw NumericalError("homodyne: masked measured block is singular");
  }
  std::vector<Eigen::Index> all_kept(static_cast<std::size_t>(parts.kept_block.rows()));
  for (std::size_t i = 0; i < all_kept.size(); ++i) all_kept[i] = static_cast<Eigen::Index>(i);
  const Matrix cross = gather(parts.cross_block, all_kept, support);
  const Matrix solved = llt.solve(cross.transpose());
  return schur_result(parts, cross * solved);
}

CovMatrix homodyne(const CovMatrix& gamma, std::span<const std::size_t> measured) {
  return homodyne(gamma, measured, HomodyneMask(measured.size(), Quadrature::X));
}

Matrix mp_pseudoinverse(const Matrix& m, double rank_tol) {
  if (m.rows() != m.cols()) throw DimensionError("mp_pseudoinverse: matrix must be square");
  if (m.size() == 0) return m;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.transpose()));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("mp_pseudoinverse: eigen decomposition failed");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double cutoff = rank_tol * lambda.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) > cutoff) inv(i) = 1.0 / lambda(i);
  }
  const Matrix& v = solver.eigenvectors();
  return v * inv.asDiagonal() * v.transpose();
}

CovMatrix rotate_into_projection_frame(const CovMatrix& gamma,
                                       std::span<const std::size_t> measured,
                                       const HomodyneMask& mask) {
  if (mask.size() != measured.size()) {
    throw DimensionError("rotate_into_projection_frame: mask and measured modes differ in size");
  }
  const SymplecticMatrix quarter_turn = phase_shift(std::numbers::pi / 2.0);
  CovMatrix out = gamma;
  const int n = static_cast<int>(gamma.n_modes());
  for (std::size_t k = 0; k < measured.size(); ++k) {
    if (mask[k] != Quadrature::X) continue;
    const int mode[] = {static_cast<int>(measured[k])};
    out = apply_symplectic(out, embed_on_modes(quarter_turn, n, mode));
  }
  return out;
}

}  // namespace gaussdistill
