#pragma once

#include <stdexcept>
#include <string>

namespace leontief {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

// The Newton matrix (ZM + W) could not be factored.
class SingularNewtonSystem : public Error {
 public:
  using Error::Error;
};

class LineSearchFailure : public Error {
 public:
  using Error::Error;
};

// Raised when a gradient is requested at a point where the merit is zero.
class ZeroMerit : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace leontief
