#pragma once

#include <stdexcept>
#include <string>

namespace ngopt {

/// Malformed arguments: dimension mismatches, out-of-range parameters,
/// unknown problem names, starts outside the strict interior.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A problem callable produced a non-finite value or gradient.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, int index)
      : std::runtime_error(what), index(index) {}

  int index;  // offending constraint index, -1 for the objective
};

/// The objective gradient vanished within tolerance: the direction field is
/// undefined and the trajectory has reached a stationary point.
class CriticalPointSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The constraint gradient vanished within tolerance in the
/// single-constraint direction; callers fall back to plain descent.
class ConstraintCriticalSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gradient geometry too degenerate to decompose (normalized gradients
/// parallel or anti-parallel within tolerance).
class DegenerateGeometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampling exhausted its budget without finding a strictly
/// feasible start.
class InitializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A local model matrix is singular where the computation requires it
/// invertible.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ngopt
