#pragma once

#include "gaussdistill/gaussian_state.hpp"

namespace gaussdistill {

/// Absolute window inside which a slightly negative radicand is treated as
/// roundoff and clamped to zero.
inline constexpr double kRadicandTol = 1e-12;

/// gamma = [[A, C], [C^T, B]] for a two-mode covariance matrix.
struct TwoModeBlocks {
  Eigen::Matrix2d a;
  Eigen::Matrix2d b;
  Eigen::Matrix2d c;

  static TwoModeBlocks split(const CovMatrix& gamma);
  Eigen::Matrix4d assemble() const;
};

/// The four local symplectic invariants det A, det B, det C, det gamma.
struct LocalInvariants {
  double det_a;
  double det_b;
  double det_c;
  double det_full;

  static LocalInvariants of(const CovMatrix& gamma);
};

/// s - det C - sqrt((s - det C)^2 - det gamma), s = (det A + det B) / 2.
/// Throws DimensionError for non-two-mode input and NumericalError when the
/// radicand is negative beyond roundoff.
double f_value(const CovMatrix& gamma);
double f_value(const LocalInvariants& inv);

/// -log2(f) / 2 if f < 1, else 0.
double log_negativity(const CovMatrix& gamma);
double log_negativity_from_f(double f);

/// [sqrt(s) - sqrt(s - sqrt(det gamma))]^2, s = (det A + det B) / 2.
/// Depends only on the principal-block determinants and det gamma.
double g_lower_bound(const CovMatrix& gamma);
double g_lower_bound(const LocalInvariants& inv);
double g_lower_bound(double mean_local_det, double det_full);

/// (sqrt(x) - sqrt(x - y))^2 on x >= y > 0; strictly decreasing in x.
double decreasing_gap(double x, double y);

}  // namespace gaussdistill
