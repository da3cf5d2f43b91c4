#pragma once

#include <stdexcept>
#include <string>

namespace fht {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation point closer to +-1 (or a jump) than the configured clearance.
class ClearanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Required metadata missing on an input function.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite sample encountered while processing data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An integral exceeded the overflow guard.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction step produced an inconsistent intermediate.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Combinatorial or memory budget exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration (quadrature settings, CLI input).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A verification residual exceeded its threshold.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fht
