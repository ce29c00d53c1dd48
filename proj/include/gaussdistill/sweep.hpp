#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gaussdistill/protocol.hpp"

namespace gaussdistill {

struct SweepConfig {
  double a_min = 1.0;
  double a_max = 5.0;
  SqueezeRange squeeze{};
  std::size_t samples = 10000;
  std::uint64_t seed = 42;

  void validate() const;
};

struct SweepSummary {
  std::size_t trials = 0;
  double max_margin = 0.0;
  double tolerance = kTheoremTol;
  bool pass = false;
  /// Smallest link slack of the proof chain over all records.
  double min_chain_slack = 0.0;
  std::size_t separable_count = 0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // ordered by trial index
  SweepSummary summary;
};

/// Seed of trial i; independent of how the trials are scheduled.
std::uint64_t trial_seed(std::uint64_t master, std::size_t index);

/// OpenMP kernel. Records are written by trial index, so the output matches
/// sweep_serial bit for bit regardless of thread count.
SweepResult sweep(const SweepConfig& config);

/// Single-threaded reference of the same sweep.
SweepResult sweep_serial(const SweepConfig& config);

SweepSummary summarize(const std::vector<SweepRecord>& records);

}  // namespace gaussdistill
