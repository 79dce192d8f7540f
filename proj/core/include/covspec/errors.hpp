#pragma once

#include <stdexcept>
#include <string>

namespace covspec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: bad parameters, violated preconditions, malformed files.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Two lengths carrying different symbolic units were combined.
class UnitMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard (class count, shell size, subset search) was hit.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

/// The space has no closed loops (a tree, or a simply connected backend).
class NoCycleError : public Error {
 public:
  using Error::Error;
};

/// A value was requested outside the domain of the formula (e.g. m(e)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Heisenberg parameters outside the two analysed covering-spectrum regimes.
class UnhandledRegime : public Error {
 public:
  using Error::Error;
};

/// The operation needs a finite deck group but the enumerator could not
/// certify one.
class UnsupportedCover : public Error {
 public:
  using Error::Error;
};

}  // namespace covspec
