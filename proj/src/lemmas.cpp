#include "gaussdistill/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaussdistill/entanglement.hpp"
#include "gaussdistill/errors.hpp"
#include "gaussdistill/protocol.hpp"
#include "gaussdistill/rng.hpp"
#include "parallel_map.hpp"

namespace gaussdistill {

namespace {

constexpr double kAMin = 1.0;
constexpr double kAMax = 5.0;

void require_trials(std::size_t trials, const char* name) {
  if (trials < 1) throw DomainError(std::string(name) + ": trials must be >= 1");
}

SweepRecord random_record(std::uint64_t seed, std::uint64_t stream, std::size_t i,
                          const SqueezeRange& squeeze) {
  const std::uint64_t s = derive_seed(seed, stream, i);
  return run_protocol(random_instance(s, kAMin, kAMax, squeeze), s).record;
}

LemmaReport finish(std::string name, std::size_t trials, double worst, double deviation,
                   double tolerance) {
  return {std::move(name), trials, std::max(0.0, deviation), worst, tolerance,
          deviation <= tolerance};
}

}  // namespace

LemmaReport check_lemma3(std::size_t trials, std::uint64_t seed, const SqueezeRange& squeeze,
                         Execution execution) {
  require_trials(trials, "check_lemma3");
  const auto rel = detail::map_trials<double>(trials, execution, [&](std::size_t i) {
    const SweepRecord r = random_record(seed, 3, i, squeeze);
    const double expected = std::pow(r.a * r.a - r.c * r.c, 2);
    return std::abs(r.det_final - expected) / expected;
  });
  const double worst = *std::max_element(rel.begin(), rel.end());
  return finish("lemma3", trials, worst, worst, kLemma3Tol);
}

LemmaReport check_lemma4(std::size_t trials, std::uint64_t seed, const SqueezeRange& squeeze,
                         Execution execution) {
  require_trials(trials, "check_lemma4");
  const auto excess = detail::map_trials<double>(trials, execution, [&](std::size_t i) {
    const SweepRecord r = random_record(seed, 4, i, squeeze);
    const double bound = r.a * r.a;
    return std::max(r.det_a - bound, r.det_b - bound);
  });
  const double worst = *std::max_element(excess.begin(), excess.end());
  return finish("lemma4", trials, worst, worst, kLemma4Tol);
}

CovMatrix random_williamson_state(std::uint64_t seed, double nu_max, const SqueezeRange& squeeze) {
  if (!(nu_max >= 1.0)) throw DomainError("random_williamson_state: nu_max must be >= 1");
  Rng rng(derive_seed(seed, 0, 0));
  Eigen::Vector4d diag;
  for (int k = 0; k < 2; ++k) {
    const double nu = rng.unit() < 0.1 ? 1.0 : rng.uniform(1.0, nu_max);
    diag(2 * k) = nu;
    diag(2 * k + 1) = nu;
  }
  const Matrix thermal = diag.asDiagonal();
  return apply_symplectic(CovMatrix(thermal),
                          random_symplectic(derive_seed(seed, 1, 0), squeeze));
}

LemmaReport check_lemma5(std::size_t trials, std::uint64_t seed, Execution execution) {
  require_trials(trials, "check_lemma5");
  const auto slack = detail::map_trials<double>(trials, execution, [&](std::size_t i) {
    const CovMatrix gamma = random_williamson_state(derive_seed(seed, 5, i));
    const auto inv = LocalInvariants::of(gamma);
    return f_value(inv) - g_lower_bound(inv);
  });
  const double worst = *std::min_element(slack.begin(), slack.end());
  return finish("lemma5", trials, worst, -worst, kLemma5Tol);
}

}  // namespace gaussdistill
