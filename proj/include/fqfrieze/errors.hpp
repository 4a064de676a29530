#pragma once

#include <stdexcept>
#include <string>

namespace fqfrieze {

// Base of every fault raised by the library. Normal "no" answers (a tuple
// that is not a frieze, a configuration that cannot be lifted) are returned
// as values, not thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: descriptors, tuples, parameters out of range.
class InputError : public Error {
 public:
  using Error::Error;
};

class NonPrimeCharacteristic : public InputError {
 public:
  using InputError::InputError;
};

class ReducibleModulus : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double estimate, double budget)
      : Error(what), estimate_(estimate), budget_(budget) {}

  double estimate() const { return estimate_; }
  double budget() const { return budget_; }

 private:
  double estimate_;
  double budget_;
};

// An exact division left a remainder, or a closed form came out non-integral.
// Always an implementation bug, never an input problem.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fqfrieze
