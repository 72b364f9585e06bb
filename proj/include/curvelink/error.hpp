#pragma once

#include <stdexcept>
#include <string>

namespace curvelink {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Checked 64-bit arithmetic would have wrapped.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Caller supplied malformed or inconsistent input (dimension mismatch,
/// unknown identifier, invalid walk, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A generator-image list does not send relations to relations.
class NotAHomomorphism : public Error {
public:
  using Error::Error;
};

/// A contractible projection through several components; the cycle has to be
/// split into single-component subcycles first.
class DecomposeCycle : public Error {
public:
  using Error::Error;
};

/// Something that must hold by construction did not. Always a bug or a
/// corrupted input that slipped past validation.
class InvariantFailure : public Error {
public:
  using Error::Error;
};

} // namespace curvelink
