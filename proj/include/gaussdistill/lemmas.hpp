#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "gaussdistill/gaussian_state.hpp"
#include "gaussdistill/symplectic.hpp"

namespace gaussdistill {

enum class Execution { serial, parallel };

/// Outcome of a randomized check. max_deviation >= 0 measures how far the
/// worst trial went past the identity or bound; worst_value is the raw
/// extreme (e.g. max of det G''_A - a^2, usually negative).
struct LemmaReport {
  std::string name;
  std::size_t trials = 0;
  double max_deviation = 0.0;
  double worst_value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Random protocol instances use a in [1, 5], c uniform in [0, sqrt(a^2-1)]
/// and squeezings in the given range.

/// det G'' == (a^2 - c^2)^2, relative deviation, tolerance kLemma3Tol.
LemmaReport check_lemma3(std::size_t trials, std::uint64_t seed, const SqueezeRange& squeeze = {},
                         Execution execution = Execution::parallel);

/// det G''_A <= a^2 and det G''_B <= a^2, absolute, tolerance kLemma4Tol.
LemmaReport check_lemma4(std::size_t trials, std::uint64_t seed, const SqueezeRange& squeeze = {},
                         Execution execution = Execution::parallel);

/// f(gamma) >= g(gamma) on Williamson-constructed random gamma, tolerance kLemma5Tol.
LemmaReport check_lemma5(std::size_t trials, std::uint64_t seed,
                         Execution execution = Execution::parallel);

/// S (nu1 I2 (+) nu2 I2) S^T with S = random_symplectic(derived seed, squeeze),
/// nu_k uniform in [1, nu_max] and set to exactly 1 one time in ten.
CovMatrix random_williamson_state(std::uint64_t seed, double nu_max = 5.0,
                                  const SqueezeRange& squeeze = {});

}  // namespace gaussdistill
