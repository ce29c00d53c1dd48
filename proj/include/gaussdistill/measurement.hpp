#pragma once

#include <span>
#include <vector>

#include "gaussdistill/gaussian_state.hpp"

namespace gaussdistill {

inline constexpr double kRankTol = 1e-12;

enum class Quadrature { X, P };

/// One measured quadrature per measured mode.
using HomodyneMask = std::vector<Quadrature>;

/// Pure Gaussian state D_d = diag(1/d, d, 1/d, d) on two measured modes.
struct ProjectionTarget {
  double d = 1.0;

  explicit ProjectionTarget(double squeezing);

  Matrix covariance() const;
  /// D_d^2, the term added to the measured block.
  Matrix measured_block_shift() const;
};

/// Partition of a state into kept and measured modes. Every block is taken
/// after reordering the kept modes first:
///   [[kept_block, cross_block], [cross_block^T, measured_block]].
struct BlockPartition {
  Matrix kept_block;      // kept-kept
  Matrix measured_block;  // measured-measured
  Matrix cross_block;     // kept-measured
  ModeLayout kept_layout;
  ModeLayout measured_layout;

  Matrix reassemble() const;
};

/// Throws DimensionError unless kept and measured are disjoint and cover all
/// modes. Either may be in any order; block order follows the given order.
BlockPartition block_split(const CovMatrix& gamma, std::span<const std::size_t> kept,
                           std::span<const std::size_t> measured);

/// Modes of gamma not in measured, in their original order.
ModeIndices complement_modes(const CovMatrix& gamma, std::span<const std::size_t> measured);

/// Projection of the two measured modes onto the pure state D_d:
///   M_d = C1 - C3 (C2 + D_d^2)^{-1} C3^T.
/// The result lives on the remaining modes (original order).
CovMatrix project_pure_gaussian(const CovMatrix& gamma, std::span<const std::size_t> measured,
                                const ProjectionTarget& target);

/// Ideal homodyne detection:
///   G'' = C1 - C3 (pi C2 pi)^MP C3^T,
/// with pi selecting the masked quadrature of each measured mode. The MP
/// inverse is evaluated by inverting C2 on the masked support only and
/// embedding back with zeros. Throws NumericalError when that block is
/// singular relative to kRankTol.
CovMatrix homodyne(const CovMatrix& gamma, std::span<const std::size_t> measured,
                   const HomodyneMask& mask);
/// X homodyne on every measured mode.
CovMatrix homodyne(const CovMatrix& gamma, std::span<const std::size_t> measured);

/// pi = diag(1, 0, ...) with a one on the masked quadrature of each mode.
Matrix quadrature_projector(const HomodyneMask& mask);

/// Moore-Penrose inverse of a symmetric PSD matrix via its eigendecomposition.
/// Eigenvalues with |lambda| <= rank_tol * max|lambda| are dropped.
Matrix mp_pseudoinverse(const Matrix& m, double rank_tol = kRankTol);

/// D_d is infinitely squeezed in P as d -> 0, so project_pure_gaussian tends to
/// P homodyne. This rotates every X-masked measured mode by a quarter turn so
/// that project_pure_gaussian on the result tends to homodyne(gamma, measured, mask).
CovMatrix rotate_into_projection_frame(const CovMatrix& gamma,
                                       std::span<const std::size_t> measured,
                                       const HomodyneMask& mask);

}  // namespace gaussdistill
