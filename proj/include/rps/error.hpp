#pragma once

#include <stdexcept>
#include <string>

namespace rps {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed an argument outside the operation's domain
/// (reliability outside [0,1], unknown label, mismatched frames, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed external input: JSON, CSV, label names.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value would violate a structural invariant (mass does not sum to one,
/// negative mass, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Combination of two bodies of evidence whose conflict is total.
class ConflictError : public Error {
 public:
  ConflictError(const std::string& what, double conflict)
      : Error(what), conflict_(conflict) {}

  double conflict() const noexcept { return conflict_; }

 private:
  double conflict_;
};

}  // namespace rps
