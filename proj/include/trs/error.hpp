#pragma once

#include <stdexcept>
#include <string>

namespace trs {

// Base for every error raised by the library. Decoding failure is not an
// error: decoders return an empty optional instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};

// A caller-supplied argument violates a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Code parameters rejected by the family / definition inequalities.
class ParameterRejected : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (e.g. two accepted decoding
// candidates inside the unique-decoding radius, or G*H^T != 0).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Malformed key, ciphertext, matrix or parameter file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace trs
