#pragma once

#include <stdexcept>
#include <string>

namespace onebranch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionMismatch : public Error {
 public:
  using Error::Error;
};

/// The truncation order N is too small for the requested computation.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotARing : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class DifferentOrders : public Error {
 public:
  using Error::Error;
};

class InvalidVector : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace onebranch
