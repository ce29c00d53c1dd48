#pragma once

#include <stdexcept>
#include <string>

namespace gaussdistill {

// Matrix shapes or mode counts that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the admissible set (negative squeezing, c > sqrt(a^2-1), ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation that only fails on invalid input or severe roundoff.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gaussdistill
