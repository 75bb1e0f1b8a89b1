#pragma once

#include <stdexcept>
#include <string>

namespace adaact {

// Base for every error the kit raises on purpose. The CLI maps the
// subtypes to exit codes; tests catch them individually.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible matrix/tensor extents (messages name both shapes).
struct DimensionError : Error {
  using Error::Error;
};

// Elementwise domain violations and non-finite values.
struct NumericError : Error {
  using Error::Error;
};

// Reduction requested over an empty axis.
struct EmptyReductionError : Error {
  using Error::Error;
};

// Inconsistent convolution / layer-chain geometry.
struct GeometryError : Error {
  using Error::Error;
};

// forward() has not populated the caches backward()/diagnostics need.
struct CacheError : Error {
  using Error::Error;
};

struct LabelError : Error {
  using Error::Error;
};

// Variance over fewer than two rows.
struct DegenerateVarianceError : Error {
  using Error::Error;
};

// Learning-rate schedule evaluated outside [0, T].
struct ScheduleRangeError : Error {
  using Error::Error;
};

// Malformed dataset/checkpoint bytes (message carries the offset).
struct FormatError : Error {
  using Error::Error;
};

struct ParameterError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Non-finite loss during training (message carries the step).
struct DivergenceError : Error {
  using Error::Error;
};

// Missing diagnostic snapshot.
struct StateError : Error {
  using Error::Error;
};

// Paired runs drifted out of lockstep.
struct SyncError : Error {
  using Error::Error;
};

}  // namespace adaact
