#pragma once

#include <stdexcept>
#include <string>

namespace graphalg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input: bad ids, broken paths, bad JSON.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Something that the mathematics guarantees cannot happen did happen.
/// Always a bug (or an exhausted fuel counter), never a verdict.
class InternalError : public Error {
 public:
  using Error::Error;
};

class FuelExhausted : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace graphalg
