#pragma once

#include <stdexcept>
#include <string>

namespace wh {

/// Quadrature failed to reach the requested tolerance. Carries the best
/// available estimate so callers can decide whether to proceed anyway.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double achieved_value, double achieved_error)
      : std::runtime_error(what), value(achieved_value), error(achieved_error) {}
  double value;
  double error;
};

/// An extrapolation or iteration sequence failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration norms grew instead of decaying.
class InstabilityError : public std::runtime_error {
 public:
  explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A field does not fit the requested periodic box (tail above threshold).
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wh
