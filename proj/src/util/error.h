// error.h
// Error taxonomy shared across the toolkit. CLI maps these to exit codes:
// 1 usage, 2 data, 3 numerical.

#pragma once

#include <stdexcept>
#include <string>

namespace mcasr {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad shapes, bad files, bad manifests.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : DataError {
  using DataError::DataError;
};

// Numerical failure: singular systems, degenerate statistics, non-finite values.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrixError : NumericalError {
  explicit SingularMatrixError(const std::string& msg, int index = -1)
      : NumericalError(msg), index(index) {}
  int index;  // e.g. frequency bin of the offending system
};

struct DegenerateStatsError : NumericalError {
  explicit DegenerateStatsError(const std::string& msg, int freq = -1)
      : NumericalError(msg), freq(freq) {}
  int freq;
};

}  // namespace mcasr
