#pragma once

#include <stdexcept>
#include <string>

namespace gpval {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad JSON, mismatched ground sets, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An object failed one of its defining axioms; the message names the axiom
/// and carries a witness.
class AxiomError : public InputError {
 public:
  using InputError::InputError;
};

/// A computation reached a state that correct code never reaches.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpval
