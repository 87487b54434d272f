#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller handed over data that violates a documented precondition:
/// a malformed fan, a rank-deficient cone matrix, an unknown builder.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A contract that should be guaranteed by earlier validation was broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
