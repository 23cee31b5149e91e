#pragma once

#include <stdexcept>
#include <string>

namespace hospfin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance data violates a structural invariant. The message names the field.
class InvalidInstance : public Error {
 public:
  InvalidInstance(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Scenario file is malformed or carries an unsupported schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard was exceeded.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class BudgetViolation : public Error {
 public:
  using Error::Error;
};

/// An operation requires an assumption the instance does not satisfy.
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hospfin
