#pragma once

#include <optional>

#include "cliff/multivector.hpp"
#include "cliff/ratmat.hpp"

namespace cliff {

// Element a*1 + b*I of the center; for even-dimensional algebras b is
// necessarily zero.
struct CenterElement {
  Rational a;
  Rational b;

  friend bool operator==(const CenterElement& x, const CenterElement& y) {
    return x.a == y.a && x.b == y.b;
  }
};

// nullopt when x is not of the form a + b*I or fails to commute with the
// generators.
std::optional<CenterElement> as_center_element(const Multivector& x);
Multivector center_element_to_multivector(const Signature& sig, const CenterElement& z);

}  // namespace cliff

namespace cliff::groups {

// Exact matrix certified against the metric: M^T g M = g and det = +/-1.
class OrthoMatrix {
 public:
  // Throws NotOrthogonal when either condition fails.
  static OrthoMatrix checked(RatMatrix m, const Signature& sig);

  const RatMatrix& matrix() const { return m_; }
  const Signature& metric() const { return sig_; }
  const Rational& det() const { return det_; }
  std::size_t size() const { return m_.rows(); }

  friend OrthoMatrix operator*(const OrthoMatrix& a, const OrthoMatrix& b);
  friend bool operator==(const OrthoMatrix& a, const OrthoMatrix& b) {
    return a.sig_ == b.sig_ && a.m_ == b.m_;
  }
  friend bool operator!=(const OrthoMatrix& a, const OrthoMatrix& b) { return !(a == b); }

 private:
  OrthoMatrix(RatMatrix m, const Signature& sig, Rational det)
      : m_(std::move(m)), sig_(sig), det_(std::move(det)) {}

  RatMatrix m_;
  Signature sig_;
  Rational det_;
};

// Membership is decided by exact conjugation of the n generators; linearity
// extends the check to all of V.
bool in_clifford_group(const Multivector& x);
bool in_twisted_clifford_group(const Multivector& x);

// Column A holds the coordinates of x e_A x^-1 (or alpha(x) e_A x^-1 for the
// twisted action). Throws NotInGroup when x lies outside the group.
OrthoMatrix adjoint_matrix(const Multivector& x);
OrthoMatrix twisted_adjoint_matrix(const Multivector& x);

struct GroupCertificate {
  Multivector element;
  bool in_clifford_group = false;
  bool in_twisted_clifford_group = false;
  bool in_pin = false;
  bool in_spin = false;
  bool in_reduced_pin = false;
  // N(x) when it is central; Pin membership pins it to +/-1.
  std::optional<CenterElement> norm_value;
};

GroupCertificate classify(const Multivector& x);

enum class KernelStructure { Z2, Z2xZ2, Z4 };

// Kernel of the adjoint action restricted to Pin: {+-1} for even n; for odd
// n it is {+-1, +-I}, cyclic when I^2 = -1 (p-q = 3 mod 4) and Klein when
// I^2 = +1 (p-q = 1 mod 4). Each kernel element is verified to act as the
// identity matrix.
KernelStructure kernel_of_adjoint_on_pin(const Signature& sig);

}  // namespace cliff::groups
