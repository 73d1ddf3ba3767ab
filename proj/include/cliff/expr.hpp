#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "cliff/multivector.hpp"

namespace cliff::expr {

// Input language of the CLI and the test fixtures:
//
//   expr     := term (('+'|'-') term)*
//   term     := ('-')? factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | symbol | '(' expr ')'
//   rational := uint ('/' posuint)?
//
// '^' binds tighter than '*'; unary minus binds looser than '^'. There is
// no division operator: rational literals carry their denominator, which
// keeps evaluation total. Whitespace is insignificant.
enum class Mode { Cl23, Cl13c };

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
  enum class Kind {
    RationalLit,   // value
    Generator,     // generator_index
    Pseudoscalar,  // 'i' in cl23 mode, 'I' in cl13c mode
    Negate,        // lhs
    Add,           // lhs, rhs
    Sub,           // lhs, rhs
    Mul,           // lhs, rhs
    Pow,           // lhs, exponent
  };

  Kind kind;
  Rational value;
  int generator_index = -1;
  std::uint64_t exponent = 0;
  ExprPtr lhs, rhs;
};

struct ExprAst {
  Mode mode;
  ExprPtr root;
};

// Throws SyntaxError (with byte offset) or UnknownSymbol.
ExprAst parse(const std::string& text, Mode mode);

// Folds the tree through the exact algebra. Both modes evaluate inside the
// five-dimensional real algebra: cl13c generators enter through the trivial
// embedding (gamma_mu as e_mu, the imaginary unit as the pseudoscalar).
Multivector evaluate(const ExprAst& ast);

// Canonical renderer for the cl23 mode; inverse of parse+evaluate.
std::string render(const Multivector& m);

}  // namespace cliff::expr
