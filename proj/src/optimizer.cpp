#include "gaussdistill/optimizer.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "gaussdistill/errors.hpp"
#include "gaussdistill/measurement.hpp"
#include "gaussdistill/rng.hpp"
#include "parallel_map.hpp"

namespace gaussdistill {

namespace {

constexpr std::size_t kDim = 2 * EulerParams::kSize;
constexpr double kPenalty = 1e6;

// Search coordinates per party: 4 angles, 2 squeeze coordinates y with
// log d = log(max_squeeze) * tanh(y), 4 angles.
struct SearchSpace {
  double log_max_squeeze;

  EulerParams decode(const double* y) const {
    EulerParams p;
    for (int k = 0; k < 4; ++k) p.left[k] = y[k];
    for (int k = 0; k < 2; ++k) p.squeezings[k] = std::exp(log_max_squeeze * std::tanh(y[4 + k]));
    for (int k = 0; k < 4; ++k) p.right[k] = y[6 + k];
    return p;
  }

  void encode(const EulerParams& p, double* y) const {
    for (int k = 0; k < 4; ++k) y[k] = p.left[k];
    for (int k = 0; k < 2; ++k) y[4 + k] = std::atanh(std::log(p.squeezings[k]) / log_max_squeeze);
    for (int k = 0; k < 4; ++k) y[6 + k] = p.right[k];
  }
};

struct Objective {
  SymmetricStateParams params;
  SearchSpace space;
  std::size_t evaluations = 0;

  std::array<EulerParams, 2> decode(const double* y) const {
    return {space.decode(y), space.decode(y + EulerParams::kSize)};
  }

  double f_final(const double* y) {
    ++evaluations;
    try {
      const auto p = decode(y);
      const ProtocolInstance inst{params, euler_compose(p[0]), euler_compose(p[1])};
      const double f = run_protocol(inst).record.f_final;
      return std::isfinite(f) ? f : kPenalty;
    } catch (const std::exception&) {
      // Ill-conditioned corners of the search box; steer the simplex away.
      return kPenalty;
    }
  }
};

double gsl_objective(const gsl_vector* v, void* ctx) {
  return static_cast<Objective*>(ctx)->f_final(gsl_vector_const_ptr(v, 0));
}

struct RestartOutcome {
  std::array<double, kDim> y{};
  double f = std::numeric_limits<double>::infinity();
  bool converged = false;
  std::size_t evaluations = 0;
};

void disable_gsl_abort() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

RestartOutcome run_restart(const OptimizeConfig& config, const SearchSpace& space,
                           const std::array<double, kDim>& start) {
  Objective objective{config.params, space};
  RestartOutcome out;
  out.y = start;
  out.f = objective.f_final(start.data());

  gsl_vector* x = gsl_vector_alloc(kDim);
  gsl_vector* step = gsl_vector_alloc(kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    gsl_vector_set(x, i, start[i]);
    const bool squeeze_coord = (i % EulerParams::kSize) == 4 || (i % EulerParams::kSize) == 5;
    gsl_vector_set(step, i, squeeze_coord ? 0.3 : 0.5);
  }
  gsl_multimin_function fn{&gsl_objective, kDim, &objective};
  gsl_multimin_fminimizer* solver =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, kDim);
  gsl_multimin_fminimizer_set(solver, &fn, x, step);

  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    if (gsl_multimin_fminimizer_iterate(solver) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver), config.size_tol) ==
        GSL_SUCCESS) {
      out.converged = true;
      break;
    }
  }
  // The simplex keeps its best vertex, so this never loses the starting point.
  if (gsl_multimin_fminimizer_minimum(solver) <= out.f) {
    out.f = gsl_multimin_fminimizer_minimum(solver);
    const gsl_vector* best = gsl_multimin_fminimizer_x(solver);
    for (std::size_t i = 0; i < kDim; ++i) out.y[i] = gsl_vector_get(best, i);
  }
  gsl_multimin_fminimizer_free(solver);
  gsl_vector_free(step);
  gsl_vector_free(x);
  out.evaluations = objective.evaluations;
  return out;
}

}  // namespace

void OptimizeConfig::validate() const {
  params.validate();
  if (restarts < 1) throw DomainError("optimize: restarts must be >= 1");
  start_range.validate();
  if (!(max_squeeze > 1.0) || !std::isfinite(max_squeeze)) {
    throw DomainError("optimize: max_squeeze must be finite and > 1");
  }
  if (start_range.min < 1.0 / max_squeeze || start_range.max > max_squeeze) {
    throw DomainError("optimize: start range must lie inside [1/max_squeeze, max_squeeze]");
  }
  if (max_iterations < 1) throw DomainError("optimize: max_iterations must be >= 1");
}

std::array<double, 2 * EulerParams::kSize> OptimizeResult::flat_params() const {
  std::array<double, kDim> out{};
  const auto a = best_params[0].flatten();
  const auto b = best_params[1].flatten();
  std::copy(a.begin(), a.end(), out.begin());
  std::copy(b.begin(), b.end(), out.begin() + EulerParams::kSize);
  return out;
}

OptimizeResult optimize(const OptimizeConfig& config, Execution execution) {
  config.validate();
  disable_gsl_abort();
  const SearchSpace space{std::log(config.max_squeeze)};

  const auto outcomes =
      detail::map_trials<RestartOutcome>(config.restarts, execution, [&](std::size_t k) {
        std::array<double, kDim> start{};
        if (k > 0) {
          for (std::size_t party = 0; party < 2; ++party) {
            const auto p = random_euler_params(derive_seed(config.seed, party, k), config.start_range);
            space.encode(p, start.data() + party * EulerParams::kSize);
          }
        }
        return run_restart(config, space, start);
      });

  OptimizeResult result;
  result.restarts = config.restarts;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    result.evaluations += outcomes[k].evaluations;
    if (outcomes[k].f < outcomes[result.best_restart].f) result.best_restart = k;
  }
  const RestartOutcome& best = outcomes[result.best_restart];
  result.converged = best.converged;
  result.best_params = {space.decode(best.y.data()),
                        space.decode(best.y.data() + EulerParams::kSize)};
  const ProtocolInstance inst{config.params, euler_compose(result.best_params[0]),
                              euler_compose(result.best_params[1])};
  result.best = run_protocol(inst, config.seed).record;
  return result;
}

}  // namespace gaussdistill
