#pragma once

#include <stdexcept>
#include <string>

namespace pexc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inversion of zero field element") {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonUnipotent : public Error {
 public:
  NonUnipotent() : Error("matrix is not unipotent: (g - I)^dim != 0") {}
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// q^d exceeds the configured vector cap (--max-vectors).
class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Element enumeration exceeded the configured cap (--max-elements).
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class TooManySubsets : public Error {
 public:
  using Error::Error;
};

class UnsupportedRange : public Error {
 public:
  using Error::Error;
};

class NoLift : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pexc
