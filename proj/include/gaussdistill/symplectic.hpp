#pragma once

#include <array>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace gaussdistill {

using Matrix = Eigen::MatrixXd;

/// Max-abs tolerance on S sigma S^T - sigma for every constructed symplectic.
inline constexpr double kSymplecticTol = 1e-10;

/// Canonical form sigma = (+)_k [[0, 1], [-1, 0]] in the interleaved ordering
/// (X1, P1, X2, P2, ...). Every module in this library assumes this ordering.
Matrix symplectic_form(int n_modes);

/// True iff max-abs(S sigma S^T - sigma) <= tol. Throws DimensionError for
/// non-square or odd-sized input.
bool is_symplectic(const Matrix& s, double tol = kSymplecticTol);

/// Element of Sp(2n, R). The constructor rejects matrices that fail
/// is_symplectic at the given tolerance.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Matrix entries, double tol = kSymplecticTol);

  static SymplecticMatrix identity(int n_modes);

  const Matrix& matrix() const noexcept { return entries_; }
  int n_modes() const noexcept { return static_cast<int>(entries_.rows() / 2); }

  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;
  SymplecticMatrix inverse() const;

 private:
  struct Unchecked {};
  SymplecticMatrix(Matrix entries, Unchecked) : entries_(std::move(entries)) {}

  Matrix entries_;

  friend SymplecticMatrix direct_sum(const SymplecticMatrix&, const SymplecticMatrix&);
  friend SymplecticMatrix embed_on_modes(const SymplecticMatrix&, int, std::span<const int>);
};

/// Block-diagonal S1 (+) S2, modes of S1 first.
SymplecticMatrix direct_sum(const SymplecticMatrix& first, const SymplecticMatrix& second);

/// Acts with a k-mode symplectic on the listed modes of an n-mode system and
/// as the identity elsewhere. modes.size() must equal local.n_modes().
SymplecticMatrix embed_on_modes(const SymplecticMatrix& local, int n_modes,
                                std::span<const int> modes);

/// Real phase-space representation of an n x n unitary acting on the
/// annihilation operators: block (j, k) is [[Re u, -Im u], [Im u, Re u]].
/// The result is orthogonal and symplectic iff u is unitary.
Matrix real_representation(const Eigen::MatrixXcd& u);

/// 4-parameter U(2) element:
///   U = diag(e^{i p0}, e^{i p1}) * [[cos p2, -sin p2], [sin p2, cos p2]] * diag(e^{i p3}, 1)
/// i.e. two output phases, one mixing angle and one relative input phase.
Eigen::Matrix2cd u2_from_params(const std::array<double, 4>& params);

/// Two-mode element of Sp(4, R) ∩ SO(4) from the U(2) parameterization above.
SymplecticMatrix orthogonal_symplectic(const std::array<double, 4>& params);

/// Euler (Bloch-Messiah) parameters of a two-mode symplectic S = V D W,
/// D = diag(d1, 1/d1, d2, 1/d2). Ten reals per party.
struct EulerParams {
  static constexpr std::size_t kSize = 10;

  std::array<double, 4> left{};
  std::array<double, 2> squeezings{1.0, 1.0};
  std::array<double, 4> right{};

  static EulerParams identity() { return {}; }

  /// Layout: left[0..3], squeezings[0..1], right[0..3].
  std::array<double, kSize> flatten() const;
  static EulerParams unflatten(std::span<const double, kSize> values);
};

/// V * D * W. Throws DomainError for a non-positive squeezing.
SymplecticMatrix euler_compose(const EulerParams& params);

SymplecticMatrix single_mode_squeezer(double r);  // diag(e^{-r}, e^{r})
SymplecticMatrix two_mode_squeezer(double r);
SymplecticMatrix beam_splitter(double theta);     // real U = [[cos, -sin], [sin, cos]]
SymplecticMatrix phase_shift(double phi);         // rotation by phi in (X, P)

/// Closed interval of squeeze factors d, 0 < min <= max.
struct SqueezeRange {
  double min = 0.2;
  double max = 5.0;

  void validate() const;
};

/// Angles uniform on [0, 2 pi), log d uniform on [log min, log max].
EulerParams random_euler_params(std::uint64_t seed, const SqueezeRange& range = {});

/// euler_compose(random_euler_params(seed, range)). Deterministic in seed.
SymplecticMatrix random_symplectic(std::uint64_t seed, const SqueezeRange& range = {});

}  // namespace gaussdistill
