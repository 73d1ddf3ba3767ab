#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliff {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic between multivectors over different signatures.
struct SignatureMismatch : Error {
  using Error::Error;
};

// inverse() on an element with a singular regular-representation matrix.
struct SingularElement : Error {
  using Error::Error;
};

// Adjoint matrix requested for an element outside the (twisted) Clifford group.
struct NotInGroup : Error {
  using Error::Error;
};

// theta / diagram operations on an element that does not certify in Pin(1,3).
struct NotInPin13 : Error {
  using Error::Error;
};

// A matrix that fails the exact metric-orthogonality condition.
struct NotOrthogonal : Error {
  using Error::Error;
};

// Spinor-space construction from a non-primitive idempotent.
struct NotPrimitive : Error {
  using Error::Error;
};

// Spinor inner product applied to an element outside the minimal left ideal,
// or a product that fails to land in f*Cl*f.
struct NotInIdeal : Error {
  using Error::Error;
};

struct DualBasisUnavailable : Error {
  using Error::Error;
};

struct SingularGram : Error {
  using Error::Error;
};

// find_s exhausted the standard basis without a match; the idempotent does
// not satisfy the factorized-from-unit-square-blades precondition.
struct NoSuchBlade : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t byte_offset)
      : Error(what), offset(byte_offset) {}
  std::size_t offset;
};

struct UnknownSymbol : SyntaxError {
  UnknownSymbol(const std::string& name, std::size_t byte_offset)
      : SyntaxError("unknown symbol '" + name + "'", byte_offset), symbol(name) {}
  std::string symbol;
};

}  // namespace cliff
