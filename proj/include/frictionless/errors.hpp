#pragma once

#include <stdexcept>
#include <string>

namespace frictionless {

// Configuration and input validation failures. The CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failures. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PositivityViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularSystem : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GridUnderflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GridOverflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonFinite : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidCoupling : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class GridMismatch : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace frictionless
