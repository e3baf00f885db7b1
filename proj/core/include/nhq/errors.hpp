#pragma once

#include <stdexcept>
#include <string>

namespace nhq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad dimension, label, range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The computation itself failed: empty postselected ensemble, underflow,
/// inconsistent readout model.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed external data (counts CSV and friends).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace nhq
