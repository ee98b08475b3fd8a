#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace donut {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape disagreement between matrices or graph nodes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf encountered, singular matrix, or other numeric failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Operation called in the wrong order (e.g. backward before forward).
class StateError : public Error {
 public:
  using Error::Error;
};

// Malformed cell or token while reading a file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// File header does not match the declared column schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Data violates a dataset invariant (non-binary treatment, inconsistent outcomes).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Stratified splitting could not produce non-empty arms in every part.
class SplitError : public Error {
 public:
  using Error::Error;
};

// Synthetic data generation failed (bad covariance, impossible sizes).
class GenerationError : public Error {
 public:
  using Error::Error;
};

// A documented operation precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Optimization diverged or produced a non-finite objective.
class TrainingError : public Error {
 public:
  using Error::Error;
};

// An estimator could not be evaluated (e.g. vanishing denominator).
class EstimatorError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment or CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Accumulates non-fatal diagnostics (clamped probabilities, unscaled columns).
struct WarningLog {
  std::vector<std::string> messages;

  void add(std::string msg) { messages.push_back(std::move(msg)); }
  bool empty() const { return messages.empty(); }
};

}  // namespace donut
