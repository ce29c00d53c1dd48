#include "gaussdistill/entanglement.hpp"

#include <cmath>
#include <sstream>

#include "gaussdistill/errors.hpp"

namespace gaussdistill {

namespace {

double checked_sqrt(double radicand, const char* where) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kRadicandTol) return 0.0;
  std::ostringstream msg;
  msg.precision(12);
  msg << where << ": negative radicand " << radicand << " (input is not a valid covariance matrix)";
  throw NumericalError(msg.str());
}

void require_two_modes(const CovMatrix& gamma, const char* where) {
  if (gamma.n_modes() != 2) {
    throw DimensionError(std::string(where) + ": expected a two-mode covariance matrix, got " +
                         std::to_string(gamma.n_modes()) + " modes");
  }
}

}  // namespace

TwoModeBlocks TwoModeBlocks::split(const CovMatrix& gamma) {
  require_two_modes(gamma, "TwoModeBlocks::split");
  return {gamma.block(0, 0), gamma.block(1, 1), gamma.block(0, 1)};
}

Eigen::Matrix4d TwoModeBlocks::assemble() const {
  Eigen::Matrix4d out;
  out << a, c, c.transpose(), b;
  return out;
}

LocalInvariants LocalInvariants::of(const CovMatrix& gamma) {
  const auto blocks = TwoModeBlocks::split(gamma);
  return {blocks.a.determinant(), blocks.b.determinant(), blocks.c.determinant(),
          gamma.entries().determinant()};
}

double f_value(const LocalInvariants& inv) {
  const double t = 0.5 * (inv.det_a + inv.det_b) - inv.det_c;
  return t - checked_sqrt(t * t - inv.det_full, "f_value");
}

double f_value(const CovMatrix& gamma) {
  require_two_modes(gamma, "f_value");
  return f_value(LocalInvariants::of(gamma));
}

double log_negativity_from_f(double f) { return f < 1.0 ? -0.5 * std::log2(f) : 0.0; }

double log_negativity(const CovMatrix& gamma) { return log_negativity_from_f(f_value(gamma)); }

double g_lower_bound(double mean_local_det, double det_full) {
  const double root_det = checked_sqrt(det_full, "g_lower_bound");
  const double s = mean_local_det;
  const double inner = checked_sqrt(s - root_det, "g_lower_bound");
  const double gap = std::sqrt(s) - inner;
  return gap * gap;
}

double g_lower_bound(const LocalInvariants& inv) {
  return g_lower_bound(0.5 * (inv.det_a + inv.det_b), inv.det_full);
}

double g_lower_bound(const CovMatrix& gamma) {
  require_two_modes(gamma, "g_lower_bound");
  return g_lower_bound(LocalInvariants::of(gamma));
}

double decreasing_gap(double x, double y) {
  if (!(y > 0.0) || x < y) throw DomainError("decreasing_gap: requires x >= y > 0");
  const double gap = std::sqrt(x) - std::sqrt(x - y);
  return gap * gap;
}

}  // namespace gaussdistill
