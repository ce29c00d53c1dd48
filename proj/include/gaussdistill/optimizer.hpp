#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "gaussdistill/lemmas.hpp"
#include "gaussdistill/protocol.hpp"

namespace gaussdistill {

struct OptimizeConfig {
  SymmetricStateParams params;
  std::size_t restarts = 50;
  std::uint64_t seed = 1;
  /// Squeezings of the random starting points.
  SqueezeRange start_range{};
  /// Squeezings explored by the search are confined to [1/max_squeeze, max_squeeze].
  double max_squeeze = 20.0;
  std::size_t max_iterations = 4000;
  /// Simplex size at which a restart counts as converged.
  double size_tol = 1e-9;

  void validate() const;
};

struct OptimizeResult {
  SweepRecord best;
  /// Euler parameters of S_A and S_B for the best record (20 values total).
  std::array<EulerParams, 2> best_params{};
  std::size_t best_restart = 0;
  bool converged = false;
  std::size_t restarts = 0;
  std::size_t evaluations = 0;

  std::array<double, 2 * EulerParams::kSize> flat_params() const;
};

/// Maximizes the final log-negativity over the 20 Euler parameters of
/// (S_A, S_B) with Nelder-Mead simplex searches. Restart 0 starts at the
/// identity protocol; the rest start at random Euler parameters. The search
/// minimizes f of the final state, which is monotone in the log-negativity
/// where the latter is positive and stays informative where it is zero.
/// Restarts run in parallel unless execution is serial; the result does not
/// depend on the choice.
OptimizeResult optimize(const OptimizeConfig& config, Execution execution = Execution::parallel);

}  // namespace gaussdistill
