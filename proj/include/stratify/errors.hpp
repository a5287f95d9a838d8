#pragma once

#include <stdexcept>
#include <string>

namespace stratify {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition. The CLI maps it to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran into its cap, so the answer is unknown. Exit code 2.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// A property that the theory guarantees did not hold. Exit code 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace stratify
