#pragma once

#include <stdexcept>
#include <string>

namespace citecurve {

/// Input that violates a data-model constraint (e.g. a negative count).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data that is well-formed but too sparse or flat for the requested
/// estimate (all-zero lists, fewer than two regression points, ...).
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace citecurve
