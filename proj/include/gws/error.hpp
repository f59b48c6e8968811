#pragma once

#include <stdexcept>
#include <string>

namespace gws {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different variable registries.
class RegistryMismatch : public Error {
 public:
  RegistryMismatch() : Error("operands use different variable registries") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero rational function") {}
};

// A specialization sent a denominator to zero.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error("pole hit: " + what) {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Root system, Weyl group or solver size limits.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gws
