#pragma once

#include <stdexcept>
#include <string>

namespace siflab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbol does not belong to the alphabet declared for its component.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Two traces of a system coincide after canonicalization.
class DuplicateTraceError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different trace spaces, or a trace is outside the space.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. NOS on a non-injective
/// strategy system).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A nondeterministic choice lies on a reachable cycle, so the composed
/// protocols have infinitely many distinct runs.
class RunExplosionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownResultIdError : public Error {
 public:
  using Error::Error;
};

}  // namespace siflab
