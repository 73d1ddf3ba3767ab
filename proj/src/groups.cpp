#include "cliff/groups.hpp"

#include "cliff/errors.hpp"

namespace cliff {

std::optional<CenterElement> as_center_element(const Multivector& x) {
  const Signature& sig = x.algebra();
  const BladeMask top = static_cast<BladeMask>(sig.blade_count() - 1);
  for (const auto& [m, c] : x.terms())
    if (m != 0 && m != top) return std::nullopt;
  if (!center_test(x)) return std::nullopt;
  return CenterElement{x.coeff(0), x.coeff(top)};
}

Multivector center_element_to_multivector(const Signature& sig, const CenterElement& z) {
  return Multivector::scalar(sig, z.a) +
         Multivector::basis_blade(sig, static_cast<BladeMask>(sig.blade_count() - 1), z.b);
}

}  // namespace cliff

namespace cliff::groups {

namespace {

// Conjugation images of the generators, or nullopt as soon as one leaves the
// vector space. `twisted` replaces x by alpha(x) on the left.
std::optional<std::vector<Multivector>> generator_images(const Multivector& x, bool twisted) {
  auto inv = x.try_inverse();
  if (!inv) return std::nullopt;
  const Signature& sig = x.algebra();
  const Multivector left = twisted ? x.grade_involution() : x;
  std::vector<Multivector> images;
  images.reserve(sig.n());
  for (int a = 0; a < sig.n(); ++a) {
    Multivector v = left * Multivector::basis_vector(sig, a) * *inv;
    for (const auto& [m, c] : v.terms())
      if (grade(m) != 1) return std::nullopt;
    images.push_back(std::move(v));
  }
  return images;
}

OrthoMatrix action_matrix(const Multivector& x, bool twisted) {
  auto images = generator_images(x, twisted);
  if (!images) throw NotInGroup("element is not in the (twisted) Clifford group");
  const Signature& sig = x.algebra();
  RatMatrix m(sig.n(), sig.n());
  for (int col = 0; col < sig.n(); ++col)
    for (int row = 0; row < sig.n(); ++row)
      m.at(row, col) = (*images)[col].coeff(BladeMask{1} << row);
  return OrthoMatrix::checked(std::move(m), sig);
}

}  // namespace

OrthoMatrix OrthoMatrix::checked(RatMatrix m, const Signature& sig) {
  if (m.rows() != m.cols() || m.rows() != static_cast<std::size_t>(sig.n()))
    throw NotOrthogonal("matrix size does not match the metric");
  // M^T g M = g, exactly.
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k < n; ++k)
        acc += m.at(k, i) * Rational(sig.metric(static_cast<int>(k))) * m.at(k, j);
      const Rational expected = i == j ? Rational(sig.metric(static_cast<int>(i))) : Rational(0);
      if (acc != expected) throw NotOrthogonal("matrix does not preserve the bilinear form");
    }
  }
  Rational det = m.det();
  if (det != 1 && det != -1) throw NotOrthogonal("determinant is not +1 or -1");
  return OrthoMatrix(std::move(m), sig, std::move(det));
}

OrthoMatrix operator*(const OrthoMatrix& a, const OrthoMatrix& b) {
  if (a.sig_ != b.sig_) throw SignatureMismatch("orthogonal matrices over different metrics");
  return OrthoMatrix::checked(a.m_ * b.m_, a.sig_);
}

bool in_clifford_group(const Multivector& x) {
  return generator_images(x, /*twisted=*/false).has_value();
}

bool in_twisted_clifford_group(const Multivector& x) {
  return generator_images(x, /*twisted=*/true).has_value();
}

OrthoMatrix adjoint_matrix(const Multivector& x) { return action_matrix(x, false); }

OrthoMatrix twisted_adjoint_matrix(const Multivector& x) { return action_matrix(x, true); }

GroupCertificate classify(const Multivector& x) {
  GroupCertificate cert;
  cert.element = x;

  auto inv = x.try_inverse();
  if (!inv) return cert;  // every flag stays false

  cert.in_clifford_group = in_clifford_group(x);
  cert.in_twisted_clifford_group = in_twisted_clifford_group(x);

  const Multivector n = x.norm();
  cert.norm_value = as_center_element(n);

  const Multivector one = Multivector::scalar(x.algebra(), 1);
  const bool norm_is_unit = n == one || n == -one;
  cert.in_pin = cert.in_twisted_clifford_group && norm_is_unit;
  cert.in_spin = cert.in_pin && x.is_even();
  cert.in_reduced_pin = cert.in_twisted_clifford_group && n == one;
  return cert;
}

KernelStructure kernel_of_adjoint_on_pin(const Signature& sig) {
  const Multivector one = Multivector::scalar(sig, 1);
  const RatMatrix id = RatMatrix::identity(sig.n());

  auto check_identity_action = [&](const Multivector& z) {
    if (adjoint_matrix(z).matrix() != id)
      throw Error("kernel element does not act as the identity");
  };

  check_identity_action(one);
  check_identity_action(-one);
  if (sig.n() % 2 == 0) return KernelStructure::Z2;

  const Multivector ps = Multivector::pseudoscalar(sig);
  check_identity_action(ps);
  check_identity_action(-ps);
  const Multivector square = ps * ps;
  if (square == one) return KernelStructure::Z2xZ2;   // p - q = 1 (mod 4)
  if (square == -one) return KernelStructure::Z4;     // p - q = 3 (mod 4)
  throw Error("pseudoscalar square is not +1 or -1");
}

}  // namespace cliff::groups
