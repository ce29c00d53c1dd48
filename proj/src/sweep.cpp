#include "gaussdistill/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "gaussdistill/errors.hpp"
#include "gaussdistill/rng.hpp"

namespace gaussdistill {

void SweepConfig::validate() const {
  if (samples < 1) throw DomainError("sweep: samples must be >= 1");
  if (!(a_min >= 1.0) || !(a_min <= a_max) || !std::isfinite(a_max)) {
    throw DomainError("sweep: a range must satisfy 1 <= a_min <= a_max < inf");
  }
  squeeze.validate();
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t index) {
  return derive_seed(master, 0x5eed, index);
}

namespace {

SweepRecord run_trial(const SweepConfig& config, std::size_t index) {
  const std::uint64_t seed = trial_seed(config.seed, index);
  const ProtocolInstance instance = random_instance(seed, config.a_min, config.a_max, config.squeeze);
  return run_protocol(instance, seed).record;
}

}  // namespace

SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.trials = records.size();
  s.max_margin = -std::numeric_limits<double>::infinity();
  s.min_chain_slack = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    s.max_margin = std::max(s.max_margin, r.margin);
    s.min_chain_slack = std::min(s.min_chain_slack, chain_slack(r).min());
    if (r.final_separable) ++s.separable_count;
  }
  s.pass = !records.empty() && s.max_margin <= s.tolerance;
  return s;
}

SweepResult sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRecord> records(config.samples);
  std::exception_ptr failure;
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<std::ptrdiff_t>(config.samples);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      records[static_cast<std::size_t>(i)] = run_trial(config, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gaussdistill_sweep_failure)
      {
        // Keep the lowest failing index so the reported error matches the serial run.
        if (static_cast<std::size_t>(i) < failed_index) {
          failed_index = static_cast<std::size_t>(i);
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result{std::move(records), {}};
  result.summary = summarize(result.records);
  return result;
}

SweepResult sweep_serial(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRecord> records;
  records.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) records.push_back(run_trial(config, i));
  SweepResult result{std::move(records), {}};
  result.summary = summarize(result.records);
  return result;
}

}  // namespace gaussdistill
