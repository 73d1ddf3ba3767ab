#pragma once

#include <string>
#include <vector>

#include "cliff/groups.hpp"
#include "cliff/multivector.hpp"

namespace cliff::embed {

// Exact complex rational a + b*I.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend ComplexRational operator+(const ComplexRational& x, const ComplexRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ComplexRational operator-(const ComplexRational& x, const ComplexRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ComplexRational operator*(const ComplexRational& x, const ComplexRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  ComplexRational operator-() const { return {-re, -im}; }
  friend bool operator==(const ComplexRational& x, const ComplexRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const ComplexRational& x, const ComplexRational& y) { return !(x == y); }
};

// Element of the complex spacetime algebra: 16 gamma-blades with complex
// rational coefficients. Canonicalization mirrors Multivector.
class ComplexMultivector13 {
 public:
  using Term = std::pair<BladeMask, ComplexRational>;

  ComplexMultivector13() = default;

  static ComplexMultivector13 scalar(ComplexRational c);
  static ComplexMultivector13 basis_blade(BladeMask m, ComplexRational c = {Rational(1), Rational(0)});
  static ComplexMultivector13 gamma(int mu);
  static ComplexMultivector13 imaginary_unit() { return scalar({Rational(0), Rational(1)}); }
  static ComplexMultivector13 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  ComplexRational coeff(BladeMask m) const;
  bool is_zero() const { return terms_.empty(); }

  ComplexMultivector13 operator-() const;
  friend ComplexMultivector13 operator+(const ComplexMultivector13& a, const ComplexMultivector13& b);
  friend ComplexMultivector13 operator-(const ComplexMultivector13& a, const ComplexMultivector13& b);
  friend ComplexMultivector13 operator*(const ComplexMultivector13& a, const ComplexMultivector13& b);
  friend ComplexMultivector13 operator*(const ComplexRational& c, const ComplexMultivector13& a);

  friend bool operator==(const ComplexMultivector13& a, const ComplexMultivector13& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ComplexMultivector13& a, const ComplexMultivector13& b) {
    return !(a == b);
  }

  // Canonical text in the cl13c grammar, e.g. "1/2-3/2*I*gamma0*gamma2".
  std::string to_expression_string() const;

 private:
  std::vector<Term> terms_;
};

// The two algebra isomorphisms onto the five-dimensional real algebra:
// trivial sends gamma_mu to e_mu, twisted sends gamma_mu to -i e4 e_mu; both
// send the imaginary unit to the central pseudoscalar.
enum class EmbeddingKind { Trivial, Twisted };

// Image of gamma_mu under the twisted embedding (a 3-vector).
Multivector twisted_vector(int mu);
// Image of a gamma-blade (product of the per-generator images).
Multivector embed_blade(BladeMask mask13, EmbeddingKind kind);

Multivector embed(const ComplexMultivector13& x, EmbeddingKind kind);
// True inverse of embed: blades containing e4 are rewritten through the
// pseudoscalar as imaginary four-dimensional components.
ComplexMultivector13 extract(const Multivector& y, EmbeddingKind kind);

// Real spacetime algebra into the five-dimensional one, first four
// coordinates identified.
Multivector trivial_embed_real(const Multivector& x13);

// Pin(1,3) into Spin(2,3): identity on the even part, multiplication by the
// pseudoscalar on the odd part. Throws NotInPin13.
Multivector theta(const Multivector& x13);

// O(1,3) into SO(2,3): block extension scaling the new coordinate by det(L).
groups::OrthoMatrix ell(const RatMatrix& l);
groups::OrthoMatrix ell(const groups::OrthoMatrix& l);

// Exact commutativity of Ad(theta(x)) with ell(Ad(x)). Throws NotInPin13.
bool diagram_check(const Multivector& x13);

// Ad_x(v~) equals (Ad_x v)~ for even x and -(Ad_x v)~ for odd x, where ~ is
// the twisted embedding of a spacetime vector. Throws NotInPin13.
bool twisted_action_check(const Multivector& x13, const Multivector& v13);

// Parity and coordinate time reversal, and their Spin(2,3) images.
struct CanonicalElements {
  Multivector P;              // gamma0 in Cl(1,3)
  Multivector T;              // gamma1 gamma2 gamma3 in Cl(1,3)
  Multivector parity5;        // e1 e2 e3 e4
  Multivector time_reversal5; // -e0 e4
};
CanonicalElements canonical_elements();

}  // namespace cliff::embed
