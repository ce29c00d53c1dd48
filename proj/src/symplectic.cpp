#include "gaussdistill/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "gaussdistill/errors.hpp"
#include "gaussdistill/rng.hpp"

namespace gaussdistill {

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) {
    throw DimensionError("symplectic_form: n_modes must be >= 1, got " + std::to_string(n_modes));
  }
  Matrix sigma = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    sigma(2 * k, 2 * k + 1) = 1.0;
    sigma(2 * k + 1, 2 * k) = -1.0;
  }
  return sigma;
}

bool is_symplectic(const Matrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) {
    throw DimensionError("is_symplectic: expected a non-empty square matrix of even size, got " +
                         std::to_string(s.rows()) + "x" + std::to_string(s.cols()));
  }
  const Matrix sigma = symplectic_form(static_cast<int>(s.rows() / 2));
  return (s * sigma * s.transpose() - sigma).cwiseAbs().maxCoeff() <= tol;
}

SymplecticMatrix::SymplecticMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
  if (!is_symplectic(entries_, tol)) {
    throw DomainError("SymplecticMatrix: matrix does not preserve the symplectic form");
  }
}

SymplecticMatrix SymplecticMatrix::identity(int n_modes) {
  if (n_modes < 1) throw DimensionError("SymplecticMatrix::identity: n_modes must be >= 1");
  return SymplecticMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (rhs.entries_.rows() != entries_.rows()) {
    throw DimensionError("SymplecticMatrix product: mode counts differ");
  }
  return SymplecticMatrix(entries_ * rhs.entries_, Unchecked{});
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // S^{-1} = -sigma S^T sigma
  const Matrix sigma = symplectic_form(n_modes());
  return SymplecticMatrix(-sigma * entries_.transpose() * sigma, Unchecked{});
}

SymplecticMatrix direct_sum(const SymplecticMatrix& first, const SymplecticMatrix& second) {
  const auto n1 = first.entries_.rows();
  const auto n2 = second.entries_.rows();
  Matrix out = Matrix::Zero(n1 + n2, n1 + n2);
  out.topLeftCorner(n1, n1) = first.entries_;
  out.bottomRightCorner(n2, n2) = second.entries_;
  return SymplecticMatrix(std::move(out), SymplecticMatrix::Unchecked{});
}

SymplecticMatrix embed_on_modes(const SymplecticMatrix& local, int n_modes,
                                std::span<const int> modes) {
  if (static_cast<int>(modes.size()) != local.n_modes()) {
    throw DimensionError("embed_on_modes: got " + std::to_string(modes.size()) +
                         " target modes for a " + std::to_string(local.n_modes()) +
                         "-mode symplectic");
  }
  std::vector<bool> used(static_cast<std::size_t>(std::max(n_modes, 0)), false);
  for (int m : modes) {
    if (m < 0 || m >= n_modes || used[static_cast<std::size_t>(m)]) {
      throw DimensionError("embed_on_modes: invalid or repeated mode index " + std::to_string(m));
    }
    used[static_cast<std::size_t>(m)] = true;
  }
  Matrix out = Matrix::Identity(2 * n_modes, 2 * n_modes);
  const Matrix& s = local.entries_;
  for (std::size_t j = 0; j < modes.size(); ++j) {
    for (std::size_t k = 0; k < modes.size(); ++k) {
      out.block<2, 2>(2 * modes[j], 2 * modes[k]) =
          s.block<2, 2>(2 * static_cast<Eigen::Index>(j), 2 * static_cast<Eigen::Index>(k));
    }
  }
  return SymplecticMatrix(std::move(out), SymplecticMatrix::Unchecked{});
}

Matrix real_representation(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) throw DimensionError("real_representation: unitary must be square");
  const auto n = u.rows();
  Matrix out(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double re = u(j, k).real();
      const double im = u(j, k).imag();
      out(2 * j, 2 * k) = re;
      out(2 * j, 2 * k + 1) = -im;
      out(2 * j + 1, 2 * k) = im;
      out(2 * j + 1, 2 * k + 1) = re;
    }
  }
  return out;
}

Eigen::Matrix2cd u2_from_params(const std::array<double, 4>& params) {
  using std::polar;
  Eigen::Matrix2cd outer = Eigen::Matrix2cd::Zero();
  outer(0, 0) = polar(1.0, params[0]);
  outer(1, 1) = polar(1.0, params[1]);
  Eigen::Matrix2cd mix;
  mix << std::cos(params[2]), -std::sin(params[2]), std::sin(params[2]), std::cos(params[2]);
  Eigen::Matrix2cd inner = Eigen::Matrix2cd::Identity();
  inner(0, 0) = polar(1.0, params[3]);
  return outer * mix * inner;
}

SymplecticMatrix orthogonal_symplectic(const std::array<double, 4>& params) {
  return SymplecticMatrix(real_representation(u2_from_params(params)));
}

std::array<double, EulerParams::kSize> EulerParams::flatten() const {
  return {left[0], left[1], left[2], left[3], squeezings[0],
          squeezings[1], right[0], right[1], right[2], right[3]};
}

EulerParams EulerParams::unflatten(std::span<const double, kSize> v) {
  EulerParams p;
  p.left = {v[0], v[1], v[2], v[3]};
  p.squeezings = {v[4], v[5]};
  p.right = {v[6], v[7], v[8], v[9]};
  return p;
}

SymplecticMatrix euler_compose(const EulerParams& params) {
  const double d1 = params.squeezings[0];
  const double d2 = params.squeezings[1];
  if (!(d1 > 0.0) || !(d2 > 0.0) || !std::isfinite(d1) || !std::isfinite(d2)) {
    throw DomainError("euler_compose: squeezings must be finite and > 0, got (" +
                      std::to_string(d1) + ", " + std::to_string(d2) + ")");
  }
  const Matrix v = real_representation(u2_from_params(params.left));
  const Matrix w = real_representation(u2_from_params(params.right));
  Eigen::Vector4d diag(d1, 1.0 / d1, d2, 1.0 / d2);
  return SymplecticMatrix(v * diag.asDiagonal() * w);
}

SymplecticMatrix single_mode_squeezer(double r) {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = std::exp(-r);
  s(1, 1) = std::exp(r);
  return SymplecticMatrix(std::move(s));
}

SymplecticMatrix two_mode_squeezer(double r) {
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  Matrix s(4, 4);
  s << ch, 0, sh, 0,
       0, ch, 0, -sh,
       sh, 0, ch, 0,
       0, -sh, 0, ch;
  // Entries grow like e^r, so scale the membership tolerance with them.
  return SymplecticMatrix(std::move(s), kSymplecticTol * std::max(1.0, ch * ch));
}

SymplecticMatrix beam_splitter(double theta) {
  Eigen::Matrix2cd u;
  u << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return SymplecticMatrix(real_representation(u));
}

SymplecticMatrix phase_shift(double phi) {
  Eigen::MatrixXcd u(1, 1);
  u(0, 0) = std::polar(1.0, phi);
  return SymplecticMatrix(real_representation(u));
}

void SqueezeRange::validate() const {
  if (!(min > 0.0) || !std::isfinite(max) || !(min <= max)) {
    throw DomainError("squeeze range must satisfy 0 < min <= max < inf, got [" +
                      std::to_string(min) + ", " + std::to_string(max) + "]");
  }
}

EulerParams random_euler_params(std::uint64_t seed, const SqueezeRange& range) {
  range.validate();
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  Rng rng(seed);
  EulerParams p;
  for (double& angle : p.left) angle = rng.uniform(0.0, kTwoPi);
  const double lo = std::log(range.min);
  const double hi = std::log(range.max);
  for (double& d : p.squeezings) d = std::exp(rng.uniform(lo, hi));
  for (double& angle : p.right) angle = rng.uniform(0.0, kTwoPi);
  return p;
}

SymplecticMatrix random_symplectic(std::uint64_t seed, const SqueezeRange& range) {
  return euler_compose(random_euler_params(seed, range));
}

}  // namespace gaussdistill
