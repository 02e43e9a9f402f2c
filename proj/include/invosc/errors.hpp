#pragma once

#include <stdexcept>
#include <string>

namespace invosc {

/// Base class for all numeric failures raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Argument outside the documented domain (z < 0, order out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result cannot be represented as a plain double (|log value| > 700).
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iterative scheme (series, quadrature, ODE stepper) failed to reach
/// its tolerance within the documented budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied pair violates a required constraint
/// (|u+|^2-|u-|^2=1, Im(v+ v-*)=1, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a pole (log-gamma at non-positive integers).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Index above a documented cap (terminating-series order, Fock index).
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace invosc
