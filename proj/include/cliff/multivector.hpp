#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliff/blade.hpp"
#include "cliff/rational.hpp"
#include "cliff/signature.hpp"

namespace cliff {

// Sparse multivector: blade -> exact rational coefficient, stored in
// canonical blade order with zero coefficients pruned, so structural
// equality coincides with algebraic equality. Immutable in practice:
// every operation returns a fresh value.
class Multivector {
 public:
  using Term = std::pair<BladeMask, Rational>;

  Multivector() = default;  // zero over the empty signature

  static Multivector zero(const Signature& sig) { return Multivector(sig); }
  static Multivector scalar(const Signature& sig, Rational c);
  static Multivector basis_blade(const Signature& sig, BladeMask m, Rational c = Rational(1));
  static Multivector basis_vector(const Signature& sig, int index);
  // e_0 e_1 ... e_{n-1}, the ascending-order unit pseudoscalar.
  static Multivector pseudoscalar(const Signature& sig);
  // Normalizing constructor: sorts, merges duplicates, prunes zeros.
  static Multivector from_terms(const Signature& sig, std::vector<Term> terms);

  const Signature& algebra() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(BladeMask m) const;
  Rational scalar_part() const { return coeff(0); }

  bool is_scalar() const;
  // Parity homogeneity; a Pin element is always one or the other.
  bool is_even() const;
  bool is_odd() const;

  Multivector grade_projection(int k) const;  // throws std::out_of_range
  int max_grade() const;

  Multivector grade_involution() const;
  Multivector reversion() const;
  Multivector clifford_conjugation() const;
  // N(x) = x * conj(x).
  Multivector norm() const;

  // Exact inverse through the left-regular representation; a central
  // nonzero scalar norm short-circuits to conj(x)/N(x).
  Multivector inverse() const;                 // throws SingularElement
  std::optional<Multivector> try_inverse() const;

  Multivector operator-() const;
  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Rational& c, const Multivector& a);
  friend Multivector operator*(const Multivector& a, const Rational& c);

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  // Canonical text form, e.g. "1/4-1/4*e0*e3*e4+1/4*e1*e2*e3"; the same
  // format the expression grammar accepts.
  std::string to_expression_string() const;

 private:
  explicit Multivector(const Signature& sig) : sig_(sig) {}

  Signature sig_;
  std::vector<Term> terms_;

  friend class MultivectorBuilder;
};

// Accumulating builder used by the product kernels and row-reduction glue;
// finalizes into canonical form.
class MultivectorBuilder {
 public:
  explicit MultivectorBuilder(const Signature& sig) : sig_(sig) {}
  void add(BladeMask m, const Rational& c) { raw_.emplace_back(m, c); }
  Multivector build();

 private:
  Signature sig_;
  std::vector<Multivector::Term> raw_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector wedge_product(const Multivector& a, const Multivector& b);

// True iff x commutes with every generator.
bool center_test(const Multivector& x);

// Coordinates of x in the canonical blade order (length 2^n).
std::vector<Rational> coordinates(const Multivector& x);
Multivector from_coordinates(const Signature& sig, const std::vector<Rational>& coords);

void require_same_signature(const Multivector& a, const Multivector& b);

}  // namespace cliff
