#pragma once

#include <stdexcept>
#include <string>

namespace copsrobber {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or request document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Self-loop or vertex id outside [0, n).
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

/// Operation requires a connected graph.
class NotConnected : public Error {
 public:
  using Error::Error;
};

/// Block decomposition of the one-vertex graph.
class SingleVertex : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a configured state/subset budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Violated precondition on arguments (bad sizes, bad speed, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SourceForbidden : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EmptyFactor : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooSmall : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooLarge : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InfeasibleInput : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Rejection sampler gave up.
class RetryLimit : public Error {
 public:
  using Error::Error;
};

/// Socket bind or filesystem failure outside the library's control.
class EnvironmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace copsrobber
