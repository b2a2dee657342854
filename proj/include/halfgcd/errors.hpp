#pragma once

#include <stdexcept>

namespace halfgcd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A transform length exceeds what the field's roots of unity support.
class UnsupportedLength : public Error {
 public:
  using Error::Error;
};

/// A polynomial does not fit in the requested transform length.
class LengthOverflow : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by the normal-case half-gcd routines when a quotient of degree
/// other than one is met. Callers fall back to the general algorithm.
class AbnormalSequence : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// gcd(0, 0).
class Undefined : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace halfgcd
