#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steklov {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the supported mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration, basis request or medium description.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Expression syntax error; `offset` is the 1-based byte position of the
/// first offending token.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : ConfigError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Expression evaluation failure (e.g. division by ~0) at a sample point.
class EvaluationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Operation not defined for the given input kind.
class UnsupportedError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Numerical failure: singular systems, poles, non-convergence.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The wavenumber is (close to) an interior Dirichlet/Neumann eigenvalue, so
/// the stiffness-minus-mass matrix cannot be inverted reliably.
class SingularSystemError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Denominator of a closed-form eigenvalue formula vanishes.
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Interface matching system for the layered disk is singular.
class ResonanceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Root bracket does not contain a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace steklov
