#pragma once

#include <stdexcept>
#include <string>

namespace frob {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad constructor arguments: compositions that do not add up, n < 2, ...
class InvalidParameter : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

/// The algebra has no matrix realization of the required kind.
class NoAmbient : public Error {
public:
  using Error::Error;
};

/// A nondegenerate B_F was required but the form has a kernel.
class NotFrobenius : public Error {
public:
  using Error::Error;
};

/// Random search exhausted its attempts without finding a Frobenius functional.
class NotFrobeniusOrUnlucky : public Error {
public:
  using Error::Error;
};

class NotATree : public Error {
public:
  using Error::Error;
};

class EdgeNotInSet : public Error {
public:
  using Error::Error;
};

class HypothesisViolated : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class LimitExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace frob
