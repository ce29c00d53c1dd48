#pragma once

// Reference computations that share no code path with the library routines
// they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

using Eigen::MatrixXd;

inline MatrixXd sigma(int n_modes) {
  MatrixXd s = MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    s(2 * k, 2 * k + 1) = 1.0;
    s(2 * k + 1, 2 * k) = -1.0;
  }
  return s;
}

/// Smallest symplectic eigenvalue of the partial transpose (P_B -> -P_B) of a
/// two-mode covariance matrix, from the spectrum of i sigma G~.
inline double min_pt_symplectic_eigenvalue(const MatrixXd& gamma) {
  MatrixXd flip = MatrixXd::Identity(4, 4);
  flip(3, 3) = -1.0;
  const MatrixXd pt = flip * gamma * flip;
  const Eigen::MatrixXcd m = std::complex<double>(0.0, 1.0) * (sigma(2) * pt).cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
  double best = INFINITY;
  for (int i = 0; i < 4; ++i) best = std::min(best, std::abs(solver.eigenvalues()(i)));
  return best;
}

/// f == nu~_-^2 and E_N == max(0, -log2 nu~_-).
inline double f_from_spectrum(const MatrixXd& gamma) {
  const double nu = min_pt_symplectic_eigenvalue(gamma);
  return nu * nu;
}

inline double log_negativity_from_spectrum(const MatrixXd& gamma) {
  return std::max(0.0, -std::log2(min_pt_symplectic_eigenvalue(gamma)));
}

/// Homodyne on the last two modes of an 8x8 matrix, with the Moore-Penrose
/// inverse of the full 4x4 pi C2 pi from a rank-revealing decomposition.
inline MatrixXd homodyne_last_two_modes(const MatrixXd& gamma, bool measure_x) {
  const MatrixXd c1 = gamma.topLeftCorner(4, 4);
  const MatrixXd c2 = gamma.bottomRightCorner(4, 4);
  const MatrixXd c3 = gamma.topRightCorner(4, 4);
  MatrixXd pi = MatrixXd::Zero(4, 4);
  pi(measure_x ? 0 : 1, measure_x ? 0 : 1) = 1.0;
  pi(measure_x ? 2 : 3, measure_x ? 2 : 3) = 1.0;
  const MatrixXd masked = pi * c2 * pi;
  Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(masked);
  cod.setThreshold(1e-12);
  return c1 - c3 * cod.pseudoInverse() * c3.transpose();
}

/// det G'' as the ratio of two masked determinants of the 8x8 pre-measurement
/// matrix (kept quadratures + measured X quadratures, over measured X only).
inline double homodyne_det_ratio(const MatrixXd& gamma) {
  const int numerator_idx[] = {0, 1, 2, 3, 4, 6};
  const int denominator_idx[] = {4, 6};
  MatrixXd num(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) num(i, j) = gamma(numerator_idx[i], numerator_idx[j]);
  MatrixXd den(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) den(i, j) = gamma(denominator_idx[i], denominator_idx[j]);
  return num.determinant() / den.determinant();
}

}  // namespace oracle
