#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

class GkmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or files.
class ParseError : public GkmError {
 public:
  using GkmError::GkmError;
};

// An operation was called outside its domain (wall vectors, dependent forms, ...).
class PreconditionError : public GkmError {
 public:
  using GkmError::GkmError;
};

class AmbiguousConnection : public GkmError {
 public:
  using GkmError::GkmError;
};

class NoConnection : public GkmError {
 public:
  using GkmError::GkmError;
};

// A computation that must succeed mathematically did not; the input was not
// what it claimed to be, or there is a bug.
class IntegrityError : public GkmError {
 public:
  using GkmError::GkmError;
};

}  // namespace gkm
