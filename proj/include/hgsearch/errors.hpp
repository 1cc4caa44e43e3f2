#pragma once

#include <stdexcept>
#include <string>

namespace hgsearch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The degree bound handed to an interpolating determinant was too small.
class DegreeBoundError : public Error {
 public:
  using Error::Error;
};

/// A Pochhammer factor in a denominator vanished.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A fit-matrix row refers to an index where the series is undefined.
class UndefinedRowError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different quadratic fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgsearch
