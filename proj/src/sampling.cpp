#include "cliff/sampling.hpp"

namespace cliff {

namespace {

Rational quadratic_form(const Multivector& v) {
  const Signature& sig = v.algebra();
  Rational phi(0);
  for (int i = 0; i < sig.n(); ++i) {
    const Rational c = v.coeff(BladeMask{1} << i);
    phi += Rational(sig.metric(i)) * c * c;
  }
  return phi;
}

Rational bilinear(const Multivector& a, const Multivector& b) {
  const Signature& sig = a.algebra();
  Rational g(0);
  for (int i = 0; i < sig.n(); ++i)
    g += Rational(sig.metric(i)) * a.coeff(BladeMask{1} << i) * b.coeff(BladeMask{1} << i);
  return g;
}

// Rational point on the quadric Phi(v) = Phi(e_A): second intersection of
// the line through e_A with direction u.
Multivector random_unit_vector(const Signature& sig, Rng& rng) {
  std::uniform_int_distribution<int> axis(0, sig.n() - 1);
  for (;;) {
    const Multivector base = Multivector::basis_vector(sig, axis(rng));
    const Multivector u = random_vector(sig, rng);
    const Rational phi_u = quadratic_form(u);
    if (phi_u == 0) continue;
    const Rational t = Rational(-2) * bilinear(base, u) / phi_u;
    const Multivector v = base + t * u;
    if (quadratic_form(v) == 1 || quadratic_form(v) == -1) return v;
  }
}

}  // namespace

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  return rat(num(rng), den(rng));
}

Rational random_nonzero_rational(Rng& rng) {
  for (;;) {
    Rational q = random_rational(rng);
    if (q != 0) return q;
  }
}

Multivector random_multivector(const Signature& sig, Rng& rng, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<BladeMask> mask(0, static_cast<BladeMask>(sig.blade_count() - 1));
  std::vector<Multivector::Term> terms;
  const int k = count(rng);
  for (int t = 0; t < k; ++t) terms.emplace_back(mask(rng), random_rational(rng));
  return Multivector::from_terms(sig, std::move(terms));
}

Multivector random_vector(const Signature& sig, Rng& rng) {
  std::vector<Multivector::Term> terms;
  for (int i = 0; i < sig.n(); ++i) terms.emplace_back(BladeMask{1} << i, random_rational(rng));
  return Multivector::from_terms(sig, std::move(terms));
}

Multivector random_nonisotropic_vector(const Signature& sig, Rng& rng) {
  for (;;) {
    Multivector v = random_vector(sig, rng);
    if (quadratic_form(v) != 0) return v;
  }
}

Multivector random_versor(const Signature& sig, Rng& rng, int factors) {
  if (factors == 0) {
    std::uniform_int_distribution<int> k(1, 6);
    factors = k(rng);
  }
  Multivector x = random_nonisotropic_vector(sig, rng);
  for (int i = 1; i < factors; ++i) x = x * random_nonisotropic_vector(sig, rng);
  return x;
}

Multivector random_pin_element(const Signature& sig, Rng& rng, int factors) {
  if (factors == 0) {
    std::uniform_int_distribution<int> k(1, 6);
    factors = k(rng);
  }
  Multivector x = random_unit_vector(sig, rng);
  for (int i = 1; i < factors; ++i) x = x * random_unit_vector(sig, rng);
  return x;
}

}  // namespace cliff
