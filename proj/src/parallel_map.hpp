#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <vector>

#include "gaussdistill/lemmas.hpp"

namespace gaussdistill::detail {

/// out[i] = fn(i) for i in [0, n). Results are placed by index, so serial and
/// parallel execution produce identical vectors. The exception of the lowest
/// failing index is rethrown.
template <class T, class Fn>
std::vector<T> map_trials(std::size_t n, Execution execution, Fn&& fn) {
  std::vector<T> out(n);
  if (execution == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = fn(idx);
    } catch (...) {
#pragma omp critical(gaussdistill_map_failure)
      {
        if (idx < failed_index) {
          failed_index = idx;
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace gaussdistill::detail
