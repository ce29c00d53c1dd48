#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaussdistill/symplectic.hpp"

namespace gaussdistill {

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kUncertaintyTol = 1e-9;

using ModeIndices = std::vector<std::size_t>;

/// Ordered mode labels; label i names rows/columns 2i and 2i+1.
class ModeLayout {
 public:
  ModeLayout() = default;
  explicit ModeLayout(std::vector<std::string> labels);
  ModeLayout(std::initializer_list<std::string> labels)
      : ModeLayout(std::vector<std::string>(labels)) {}

  /// "m0", "m1", ...
  static ModeLayout numbered(std::size_t n_modes);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& operator[](std::size_t i) const { return labels_.at(i); }

  /// Throws DimensionError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  ModeIndices indices_of(std::span<const std::string> labels) const;

  ModeLayout subset(std::span<const std::size_t> indices) const;
  ModeLayout concat(const ModeLayout& other) const;

  bool operator==(const ModeLayout&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Real symmetric 2n x 2n second-moment matrix with its mode layout.
/// Vacuum is the identity. Construction enforces shape and symmetry
/// (max-abs(G - G^T) <= 1e-12, then exactly symmetrized); the uncertainty
/// relation is checked by is_valid_covariance.
class CovMatrix {
 public:
  explicit CovMatrix(Matrix entries);
  CovMatrix(Matrix entries, ModeLayout layout);

  static CovMatrix vacuum(std::size_t n_modes);

  const Matrix& entries() const noexcept { return entries_; }
  const ModeLayout& layout() const noexcept { return layout_; }
  std::size_t n_modes() const noexcept { return layout_.size(); }

  /// 2x2 block between modes i and j.
  Eigen::Matrix2d block(std::size_t i, std::size_t j) const;

  double determinant() const { return entries_.determinant(); }

 private:
  Matrix entries_;
  ModeLayout layout_;
};

/// Smallest eigenvalue of the Hermitian matrix G + i sigma.
double min_uncertainty_eigenvalue(const Matrix& gamma);

/// Symmetric within 1e-12 and G + i sigma >= -tol. Throws DimensionError for
/// non-square or odd-sized input.
bool is_valid_covariance(const Matrix& gamma, double tol = kUncertaintyTol);
bool is_valid_covariance(const CovMatrix& gamma, double tol = kUncertaintyTol);

/// (a, c) of the symmetric two-mode family
///   [[a, 0, c, 0], [0, a, 0, -c], [c, 0, a, 0], [0, -c, 0, a]],
/// a >= 1, 0 <= c <= sqrt(a^2 - 1).
struct SymmetricStateParams {
  double a = 1.0;
  double c = 0.0;

  /// Two-mode squeezed vacuum: a = cosh 2r, c = sinh 2r.
  static SymmetricStateParams from_squeezing(double r);

  /// Throws DomainError naming the violated bound.
  void validate() const;

  double c_max() const;
  bool is_pure() const;
};

CovMatrix two_mode_symmetric(const SymmetricStateParams& params,
                             ModeLayout layout = ModeLayout{"A", "B"});

/// Block-diagonal G1 (+) G2 with the given layout attached.
CovMatrix direct_sum(const CovMatrix& first, const CovMatrix& second, ModeLayout layout);
/// Same, with the concatenated layouts (labels must stay distinct).
CovMatrix direct_sum(const CovMatrix& first, const CovMatrix& second);

/// Mode i of the result is mode perm[i] of the input. Throws DimensionError
/// unless perm is a permutation of 0..n-1.
CovMatrix reorder_modes(const CovMatrix& gamma, std::span<const std::size_t> perm);
/// Reorder to the given label sequence (a permutation of the current labels).
CovMatrix reorder_modes(const CovMatrix& gamma, std::span<const std::string> order);
ModeIndices inverse_permutation(std::span<const std::size_t> perm);

/// S G S^T.
CovMatrix apply_symplectic(const CovMatrix& gamma, const SymplecticMatrix& s);

/// Principal submatrix on the kept modes, in the order given.
CovMatrix partial_trace(const CovMatrix& gamma, std::span<const std::size_t> keep);

/// Zero-based row/column indices of the listed modes (2 per mode).
std::vector<Eigen::Index> quadrature_indices(std::span<const std::size_t> modes);

/// Principal submatrix of m on the given row/column indices.
Matrix principal_submatrix(const Matrix& m, std::span<const Eigen::Index> indices);

}  // namespace gaussdistill
