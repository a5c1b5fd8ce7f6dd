#pragma once

#include <stdexcept>
#include <string>

namespace ubseq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (maps to CLI exit code 2).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds the configured memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Corrupt or truncated sieve cache file.
class ChecksumError : public Error {
 public:
  using Error::Error;
};

}  // namespace ubseq
