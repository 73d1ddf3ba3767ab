#pragma once

#include <string>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/ratmat.hpp"

namespace cliff::spinors {

// Scalar of the division ring f Cl f: the pair (a, b) stands for (a + b i) f
// where i is the central pseudoscalar, so the arithmetic is complex.
struct KScalar {
  Rational a;
  Rational b;

  KScalar() : a(0), b(0) {}
  KScalar(Rational re, Rational im) : a(std::move(re)), b(std::move(im)) {}
  static KScalar one() { return {Rational(1), Rational(0)}; }

  bool is_zero() const { return a == 0 && b == 0; }

  friend KScalar operator+(const KScalar& x, const KScalar& y) { return {x.a + y.a, x.b + y.b}; }
  friend KScalar operator-(const KScalar& x, const KScalar& y) { return {x.a - y.a, x.b - y.b}; }
  friend KScalar operator*(const KScalar& x, const KScalar& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  }
  KScalar operator-() const { return {-a, -b}; }
  KScalar conj() const { return {a, -b}; }
  KScalar inverse() const;  // throws SingularElement on zero

  friend bool operator==(const KScalar& x, const KScalar& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const KScalar& x, const KScalar& y) { return !(x == y); }
};

// k x k matrix over the spinor scalar field.
class KMatrix {
 public:
  KMatrix() : k_(0) {}
  explicit KMatrix(std::size_t k) : k_(k), a_(k * k) {}
  static KMatrix identity(std::size_t k);

  std::size_t size() const { return k_; }
  KScalar& at(std::size_t r, std::size_t c) { return a_[r * k_ + c]; }
  const KScalar& at(std::size_t r, std::size_t c) const { return a_[r * k_ + c]; }

  KMatrix conj_transpose() const;  // entrywise (a,b) -> (a,-b) plus transpose
  std::optional<KMatrix> inverse() const;

  friend KMatrix operator*(const KMatrix& x, const KMatrix& y);
  friend KMatrix operator+(const KMatrix& x, const KMatrix& y);
  friend bool operator==(const KMatrix& x, const KMatrix& y) {
    return x.k_ == y.k_ && x.a_ == y.a_;
  }
  friend bool operator!=(const KMatrix& x, const KMatrix& y) { return !(x == y); }

 private:
  std::size_t k_;
  std::vector<KScalar> a_;
};

enum class Antimorphism { Conjugation, Reversion };

bool is_idempotent(const Multivector& x);
// Primitive iff the real dimension of f Cl f equals that of the center.
bool is_primitive(const Multivector& x);

struct Idempotent {
  Multivector value;
  bool primitive = false;

  // Throws NotPrimitive when x*x != x.
  static Idempotent certify(const Multivector& x);
};

// The idempotent generating the Dirac spinor space, built from the twisted
// generators: 1/2(1+etilde0) 1/2(1+i etilde1 etilde2)
//           = 1/4(1 + e1e2e3 - e0e3e4 - e0e1e2e4).
Multivector dirac_idempotent();

// Radon-Hurwitz sequence 0,1,2,2,3,3,3,3 with r_{j+8} = r_j + 4, extended
// downward by the same rule.
int radon_hurwitz(int j);
// q - r_{q-p}: the number of commuting 1/2(1 +/- blade) factors of a
// primitive idempotent. The complete orthogonal set has 2^exponent members.
int idempotent_exponent(const Signature& sig);

// First standard-basis blade s with s f' = f s (f' the antimorphism image of
// f), equivalently s f' s^-1 = f. Throws NoSuchBlade when the scan exhausts.
Multivector find_s(const Multivector& f, Antimorphism anti);

// Minimal left ideal S = Cl f with its right-K-module structure; valid for
// odd-dimensional simple algebras whose pseudoscalar squares to -1, where
// the division ring is the complex one.
class SpinorSpace {
 public:
  // Throws NotPrimitive unless f is a primitive idempotent.
  explicit SpinorSpace(const Idempotent& f);

  const Signature& algebra() const { return sig_; }
  const Multivector& idempotent() const { return f_; }
  // Elements blade*f kept when they grow the real span, scanned in canonical
  // blade order.
  const std::vector<Multivector>& real_basis() const { return real_basis_; }
  // Right-K-independent survivors of the greedy scan (Dirac-reordered when f
  // is the canonical idempotent).
  const std::vector<Multivector>& k_basis() const { return k_basis_; }
  const std::vector<Multivector>& dual_basis() const { return dual_basis_; }
  std::size_t k() const { return k_basis_.size(); }

  bool in_ideal(const Multivector& psi) const;  // psi f == psi
  // Coordinates of x in f Cl f; throws NotInIdeal when x is outside.
  KScalar to_k_scalar(const Multivector& x) const;
  Multivector from_k_scalar(const KScalar& lambda) const;  // (a + b i) f
  // phi^-1: the central element a + b i corresponding to a spinor scalar.
  Multivector central_from_k(const KScalar& lambda) const;

  const Multivector& s_element(Antimorphism anti) const;

 private:
  Signature sig_;
  Multivector f_;
  std::vector<Multivector> real_basis_;
  std::vector<Multivector> k_basis_;
  std::vector<Multivector> dual_basis_;
  Multivector s_conjugation_;
  Multivector s_reversion_;
  // fixed 2x2 system extracting (a, b) from a f + b (i f)
  std::size_t probe1_, probe2_;
  Rational f1_, f2_, g1_, g2_, probe_det_;

  void build_k_extraction();
};

// h(psi, phi) = s psi' phi converted to a spinor scalar; psi, phi must lie
// in the ideal. Throws NotInIdeal.
KScalar inner_product(const SpinorSpace& space, const Multivector& psi, const Multivector& phi,
                      Antimorphism anti);

// h_ij = h(u_i, u_j).
KMatrix gram_matrix(const SpinorSpace& space, Antimorphism anti);

// lambda* = s lambda' s^-1; complex conjugation for the Clifford-conjugation
// product, the identity for the reversion product.
KScalar scalar_conjugation(const SpinorSpace& space, const KScalar& lambda, Antimorphism anti);

// A^i_j = u~^i A u_j.
KMatrix matrix_rep(const SpinorSpace& space, const Multivector& a);

// rep(gamma0 conj(A) gamma0) equals the conjugate transpose of rep(A), with
// gamma0 the twisted image e1e2e3.
bool matrix_adjoint_check(const SpinorSpace& space, const Multivector& a);

// Sum_ij central(A^i_j) u_i u~^j; reproduces A exactly.
Multivector reconstruct(const SpinorSpace& space, const KMatrix& components);

struct CompleteIdempotentSet {
  std::vector<Multivector> f;                  // f_i = u_i u~^i
  std::vector<std::vector<Multivector>> units; // E_ij = u_i u~^j
};

// Throws DualBasisUnavailable when the space has no dual basis.
CompleteIdempotentSet complete_idempotent_set(const SpinorSpace& space);

// Cell dimensions of f_i Cl f_j all equal dim Z, the cells sum to dim Cl,
// and products obey the delta rule on spanning sets.
bool peirce_check(const SpinorSpace& space);

// e4 f = -i e0 f for the canonical idempotent.
bool e4_reduction_check(const Multivector& f);

// x in the Clifford group with conj(x) x = 1.
bool in_aut(const Multivector& x);
// in_aut plus conjugation keeps the first four coordinates inside their span.
bool in_5d_aut(const Multivector& x);

}  // namespace cliff::spinors
