#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliff/embeddings.hpp"
#include "cliff/errors.hpp"
#include "cliff/expr.hpp"
#include "cliff/sampling.hpp"
#include "cliff/spinors.hpp"

using namespace cliff;
using spinors::Antimorphism;
using spinors::KMatrix;
using spinors::KScalar;

namespace {

const Signature kCl23 = Signature::cl23();

Multivector mv(const std::string& text) {
  return expr::evaluate(expr::parse(text, expr::Mode::Cl23));
}

const spinors::SpinorSpace& dirac_space() {
  static const spinors::SpinorSpace space(
      spinors::Idempotent::certify(spinors::dirac_idempotent()));
  return space;
}

KScalar ks(long a, long b) { return {Rational(a), Rational(b)}; }

// 4x4 K-matrix from integer (re, im) pairs, row major.
KMatrix km4(std::initializer_list<std::pair<long, long>> entries) {
  KMatrix m(4);
  std::size_t k = 0;
  for (const auto& [re, im] : entries) {
    m.at(k / 4, k % 4) = ks(re, im);
    ++k;
  }
  return m;
}

Multivector random_spinor(const spinors::SpinorSpace& space, Rng& rng) {
  Multivector psi = Multivector::zero(kCl23);
  for (std::size_t j = 0; j < space.k(); ++j)
    psi = psi + space.k_basis()[j] *
                    space.from_k_scalar(KScalar{random_rational(rng), random_rational(rng)});
  return psi;
}

}  // namespace

TEST_CASE("the canonical idempotent") {
  const Multivector f = spinors::dirac_idempotent();
  CHECK(f == mv("1/4*(1-e0*e3*e4+e1*e2*e3-e0*e1*e2*e4)"));
  CHECK(f == mv("1/2*(1+e1*e2*e3)*1/2*(1-e0*e3*e4)"));
  CHECK(spinors::is_idempotent(f));
  CHECK(spinors::is_primitive(f));
  CHECK(f.clifford_conjugation() == f);
  CHECK(f.reversion() != f);
  const auto cert = spinors::Idempotent::certify(f);
  CHECK(cert.primitive);
  CHECK_THROWS_AS(spinors::Idempotent::certify(mv("e0")), NotPrimitive);
}

TEST_CASE("idempotence and primitivity checks") {
  // a single commuting factor is idempotent but not primitive
  const Multivector half = mv("1/2*(1+e1*e2*e3)");
  CHECK(spinors::is_idempotent(half));
  CHECK_FALSE(spinors::is_primitive(half));
  CHECK(spinors::is_idempotent(mv("1")));
  CHECK_FALSE(spinors::is_primitive(mv("1")));
  CHECK_FALSE(spinors::is_idempotent(mv("e0")));
  CHECK_FALSE(spinors::is_primitive(mv("0")));
  // 1/2(1+e0) squares to itself but generates a large sandwich algebra
  const Multivector g = mv("1/2*(1+e0)");
  CHECK(spinors::is_idempotent(g));
  CHECK_FALSE(spinors::is_primitive(g));
  CHECK_THROWS_AS(spinors::SpinorSpace(spinors::Idempotent::certify(g)), NotPrimitive);
}

TEST_CASE("e4 reduction identity") {
  CHECK(spinors::e4_reduction_check(spinors::dirac_idempotent()));
  // holds for any idempotent whose first factor is 1/2(1+e1e2e3)
  CHECK(spinors::e4_reduction_check(mv("1/2*(1+e1*e2*e3)*1/2*(1+e0*e3*e4)")));
  // fails when the first factor is flipped
  CHECK_FALSE(spinors::e4_reduction_check(mv("1/2*(1-e1*e2*e3)*1/2*(1-e0*e3*e4)")));
  CHECK_FALSE(spinors::e4_reduction_check(mv("1/2*(1-e1*e2*e3)*1/2*(1+e0*e3*e4)")));
}

TEST_CASE("minimal left ideal: real basis frozen from the rank oracle") {
  const auto& space = dirac_space();
  REQUIRE(space.real_basis().size() == 8);
  const BladeMask expected_masks[8] = {0, 0b00001, 0b00010, 0b00100,
                                       0b01000, 0b10000, 0b00011, 0b00101};
  const Multivector f = space.idempotent();
  for (int k = 0; k < 8; ++k) {
    CHECK(space.real_basis()[k] == Multivector::basis_blade(kCl23, expected_masks[k]) * f);
    // left-ideal membership: m f = m
    CHECK(space.real_basis()[k] * f == space.real_basis()[k]);
  }
}

TEST_CASE("K-basis reproduces the Dirac ordering") {
  const auto& space = dirac_space();
  const Multivector f = space.idempotent();
  REQUIRE(space.k() == 4);
  CHECK(space.k_basis()[0] == f);
  CHECK(space.k_basis()[1] == mv("e1") * f);
  CHECK(space.k_basis()[2] == mv("e0") * f);
  CHECK(space.k_basis()[3] == mv("e0*e1") * f);
  // diagonal action of the twisted timelike generator
  const Multivector g0 = embed::twisted_vector(0);
  CHECK(g0 * space.k_basis()[0] == space.k_basis()[0]);
  CHECK(g0 * space.k_basis()[1] == space.k_basis()[1]);
  CHECK(g0 * space.k_basis()[2] == -space.k_basis()[2]);
  CHECK(g0 * space.k_basis()[3] == -space.k_basis()[3]);
}

TEST_CASE("K-scalar arithmetic and extraction") {
  const auto& space = dirac_space();
  CHECK(ks(1, 2) * ks(3, 4) == ks(-5, 10));
  CHECK(ks(0, 1) * ks(0, 1) == ks(-1, 0));
  CHECK(ks(3, 4) * ks(3, 4).inverse() == ks(1, 0));
  CHECK_THROWS_AS(ks(0, 0).inverse(), SingularElement);

  // to_k_scalar is the inverse of from_k_scalar
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 20; ++t) {
    const KScalar lambda{random_rational(rng), random_rational(rng)};
    CHECK(space.to_k_scalar(space.from_k_scalar(lambda)) == lambda);
  }
  // f itself is the unit
  CHECK(space.to_k_scalar(space.idempotent()) == ks(1, 0));
  CHECK_THROWS_AS(space.to_k_scalar(mv("e0")), NotInIdeal);
}

TEST_CASE("find_s") {
  const Multivector f = spinors::dirac_idempotent();
  CHECK(spinors::find_s(f, Antimorphism::Conjugation) == mv("1"));
  CHECK(spinors::find_s(f, Antimorphism::Reversion) == mv("e0*e1"));
  const Multivector s = spinors::find_s(f, Antimorphism::Reversion);
  CHECK(s * f.reversion() * s.inverse() == f);
  CHECK(s * f.reversion() == f * s);
}

TEST_CASE("gram matrices frozen from the oracle") {
  const auto& space = dirac_space();
  const KMatrix h_conj = spinors::gram_matrix(space, Antimorphism::Conjugation);
  CHECK(h_conj == km4({{1, 0}, {0, 0}, {0, 0}, {0, 0},
                       {0, 0}, {1, 0}, {0, 0}, {0, 0},
                       {0, 0}, {0, 0}, {-1, 0}, {0, 0},
                       {0, 0}, {0, 0}, {0, 0}, {-1, 0}}));
  const auto h_inv = h_conj.inverse();
  REQUIRE(h_inv.has_value());
  CHECK(*h_inv == h_conj);  // self-inverse in this basis

  const KMatrix h_rev = spinors::gram_matrix(space, Antimorphism::Reversion);
  CHECK(h_rev == km4({{0, 0}, {0, 0}, {0, 0}, {1, 0},
                      {0, 0}, {0, 0}, {-1, 0}, {0, 0},
                      {0, 0}, {1, 0}, {0, 0}, {0, 0},
                      {-1, 0}, {0, 0}, {0, 0}, {0, 0}}));
  // anti-hermitian under the (identity) reversion star, still invertible
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(h_rev.at(r, c) == -h_rev.at(c, r));
  CHECK(h_rev.inverse().has_value());
}

TEST_CASE("inner product values and axioms") {
  const auto& space = dirac_space();
  // h(u3, u3) = -1, h(u1, u2) = 0 for the conjugation product
  CHECK(spinors::inner_product(space, space.k_basis()[2], space.k_basis()[2],
                               Antimorphism::Conjugation) == ks(-1, 0));
  CHECK(spinors::inner_product(space, space.k_basis()[0], space.k_basis()[1],
                               Antimorphism::Conjugation) == ks(0, 0));
  // right K-linearity on the unit: h(u1, u1 lambda) = lambda
  const KScalar lambda = ks(7, -3);
  CHECK(spinors::inner_product(space, space.k_basis()[0],
                               space.k_basis()[0] * space.from_k_scalar(lambda),
                               Antimorphism::Conjugation) == lambda);
  CHECK_THROWS_AS(
      spinors::inner_product(space, mv("e0"), space.k_basis()[0], Antimorphism::Conjugation),
      NotInIdeal);

  Rng rng(kDefaultSeed ^ 1);
  for (int t = 0; t < 15; ++t) {
    const Multivector psi = random_spinor(space, rng);
    const Multivector phi = random_spinor(space, rng);
    const Multivector a = random_multivector(kCl23, rng);
    // hermitian symmetry for conjugation
    CHECK(spinors::inner_product(space, psi, phi, Antimorphism::Conjugation) ==
          spinors::inner_product(space, phi, psi, Antimorphism::Conjugation).conj());
    // adjointness for both antimorphisms
    CHECK(spinors::inner_product(space, a * psi, phi, Antimorphism::Conjugation) ==
          spinors::inner_product(space, psi, a.clifford_conjugation() * phi,
                                 Antimorphism::Conjugation));
    CHECK(spinors::inner_product(space, a * psi, phi, Antimorphism::Reversion) ==
          spinors::inner_product(space, psi, a.reversion() * phi, Antimorphism::Reversion));
  }
}

TEST_CASE("scalar conjugation") {
  const auto& space = dirac_space();
  CHECK(spinors::scalar_conjugation(space, ks(0, 1), Antimorphism::Conjugation) == ks(0, -1));
  CHECK(spinors::scalar_conjugation(space, ks(0, 1), Antimorphism::Reversion) == ks(0, 1));
  CHECK(spinors::scalar_conjugation(space, ks(1, 0), Antimorphism::Conjugation) == ks(1, 0));
  CHECK(spinors::scalar_conjugation(space, ks(1, 0), Antimorphism::Reversion) == ks(1, 0));
  Rng rng(kDefaultSeed ^ 2);
  for (int t = 0; t < 10; ++t) {
    const KScalar lambda{random_rational(rng), random_rational(rng)};
    CHECK(spinors::scalar_conjugation(space, lambda, Antimorphism::Conjugation) ==
          lambda.conj());
    CHECK(spinors::scalar_conjugation(space, lambda, Antimorphism::Reversion) == lambda);
  }
}

TEST_CASE("dual basis") {
  const auto& space = dirac_space();
  const Multivector f = space.idempotent();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const Multivector product = space.dual_basis()[r] * space.k_basis()[c];
      CHECK(product == (r == c ? f : Multivector::zero(kCl23)));
    }
  // h^{33} = -1 makes the third dual element the negated conjugate
  CHECK(space.dual_basis()[2] == -(space.k_basis()[2].clifford_conjugation()));
  CHECK(space.dual_basis()[0] == f.clifford_conjugation());
}

TEST_CASE("matrix representation frozen from the oracle") {
  const auto& space = dirac_space();
  CHECK(spinors::matrix_rep(space, embed::twisted_vector(0)) ==
        km4({{1, 0}, {0, 0}, {0, 0}, {0, 0},
             {0, 0}, {1, 0}, {0, 0}, {0, 0},
             {0, 0}, {0, 0}, {-1, 0}, {0, 0},
             {0, 0}, {0, 0}, {0, 0}, {-1, 0}}));
  CHECK(spinors::matrix_rep(space, embed::twisted_vector(1)) ==
        km4({{0, 0}, {0, 0}, {0, 0}, {1, 0},
             {0, 0}, {0, 0}, {-1, 0}, {0, 0},
             {0, 0}, {1, 0}, {0, 0}, {0, 0},
             {-1, 0}, {0, 0}, {0, 0}, {0, 0}}));
  CHECK(spinors::matrix_rep(space, embed::twisted_vector(2)) ==
        km4({{0, 0}, {0, 0}, {0, 0}, {0, -1},
             {0, 0}, {0, 0}, {0, -1}, {0, 0},
             {0, 0}, {0, -1}, {0, 0}, {0, 0},
             {0, -1}, {0, 0}, {0, 0}, {0, 0}}));
  CHECK(spinors::matrix_rep(space, embed::twisted_vector(3)) ==
        km4({{0, 0}, {0, 0}, {0, -1}, {0, 0},
             {0, 0}, {0, 0}, {0, 0}, {0, 1},
             {0, -1}, {0, 0}, {0, 0}, {0, 0},
             {0, 0}, {0, 1}, {0, 0}, {0, 0}}));
  CHECK(spinors::matrix_rep(space, Multivector::pseudoscalar(kCl23)) ==
        km4({{0, 1}, {0, 0}, {0, 0}, {0, 0},
             {0, 0}, {0, 1}, {0, 0}, {0, 0},
             {0, 0}, {0, 0}, {0, 1}, {0, 0},
             {0, 0}, {0, 0}, {0, 0}, {0, 1}}));
  CHECK(spinors::matrix_rep(space, mv("1")) == KMatrix::identity(4));
}

TEST_CASE("representation is a faithful homomorphism") {
  const auto& space = dirac_space();
  Rng rng(kDefaultSeed ^ 3);
  for (int t = 0; t < 30; ++t) {
    const Multivector a = random_multivector(kCl23, rng);
    const Multivector b = random_multivector(kCl23, rng);
    CHECK(spinors::matrix_rep(space, a * b) ==
          spinors::matrix_rep(space, a) * spinors::matrix_rep(space, b));
    CHECK(spinors::matrix_rep(space, a + b) ==
          spinors::matrix_rep(space, a) + spinors::matrix_rep(space, b));
  }
  // injectivity across the 32 blades
  std::vector<KMatrix> images;
  for (BladeMask m = 0; m < 32; ++m) {
    const KMatrix rep = spinors::matrix_rep(space, Multivector::basis_blade(kCl23, m));
    for (const auto& prev : images) CHECK(prev != rep);
    images.push_back(rep);
  }
  // anticommutators reproduce the metric
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const KMatrix a = spinors::matrix_rep(space, embed::twisted_vector(mu));
      const KMatrix b = spinors::matrix_rep(space, embed::twisted_vector(nu));
      KMatrix expected(4);
      if (mu == nu)
        for (int j = 0; j < 4; ++j)
          expected.at(j, j) = ks(2 * Signature::cl13().metric(mu), 0);
      CHECK(a * b + b * a == expected);
    }
}

TEST_CASE("matrix adjoint identity") {
  const auto& space = dirac_space();
  for (BladeMask m = 0; m < 32; ++m)
    CHECK(spinors::matrix_adjoint_check(space, Multivector::basis_blade(kCl23, m)));
  CHECK(spinors::matrix_adjoint_check(space, mv("1")));
  Rng rng(kDefaultSeed ^ 4);
  for (int t = 0; t < 30; ++t)
    CHECK(spinors::matrix_adjoint_check(space, random_multivector(kCl23, rng)));
  // gamma_mu^dagger = gamma0 gamma_mu gamma0 since conj fixes the twisted images
  for (int mu = 0; mu < 4; ++mu) {
    const Multivector gmu = embed::twisted_vector(mu);
    CHECK(gmu.clifford_conjugation() == gmu);
    CHECK(spinors::matrix_rep(space, gmu).conj_transpose() ==
          spinors::matrix_rep(space,
                              embed::twisted_vector(0) * gmu * embed::twisted_vector(0)));
  }
}

TEST_CASE("complete idempotent set and matrix units") {
  const auto& space = dirac_space();
  const auto set = spinors::complete_idempotent_set(space);
  REQUIRE(set.f.size() == 4);
  CHECK(set.f[0] == space.idempotent());
  Multivector sum = Multivector::zero(kCl23);
  for (const auto& fi : set.f) {
    CHECK(spinors::is_idempotent(fi));
    CHECK(spinors::is_primitive(fi));
    sum = sum + fi;
  }
  CHECK(sum == mv("1"));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      CHECK(set.f[a] * set.f[b] == (a == b ? set.f[a] : Multivector::zero(kCl23)));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t d = 0; d < 4; ++d)
          CHECK(set.units[a][b] * set.units[c][d] ==
                (b == c ? set.units[a][d] : Multivector::zero(kCl23)));
  CHECK(set.units[0][1] * set.units[1][0] == set.f[0]);
}

TEST_CASE("peirce decomposition") {
  CHECK(spinors::peirce_check(dirac_space()));
}

TEST_CASE("radon-hurwitz numbers") {
  const int table[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  for (int j = 0; j < 8; ++j) CHECK(spinors::radon_hurwitz(j) == table[j]);
  CHECK(spinors::radon_hurwitz(8) == 4);
  CHECK(spinors::radon_hurwitz(9) == 5);
  CHECK(spinors::radon_hurwitz(15) == 7);
  CHECK(spinors::radon_hurwitz(-1) == -1);
  CHECK(spinors::radon_hurwitz(-8) == -4);
  CHECK(spinors::idempotent_exponent(kCl23) == 2);
  CHECK(spinors::idempotent_exponent(Signature::from_pq(0, 1)) == 0);
  // two commuting factors in the canonical idempotent, four set members
  CHECK(dirac_space().k() == (1u << spinors::idempotent_exponent(kCl23)));
}

TEST_CASE("reconstruction identity") {
  const auto& space = dirac_space();
  Rng rng(kDefaultSeed ^ 5);
  for (int t = 0; t < 20; ++t) {
    const Multivector a = random_multivector(kCl23, rng);
    CHECK(spinors::reconstruct(space, spinors::matrix_rep(space, a)) == a);
  }
  // central scalars map through phi and back
  for (int t = 0; t < 10; ++t) {
    const KScalar z{random_rational(rng), random_rational(rng)};
    CHECK(space.to_k_scalar(space.central_from_k(z) * space.idempotent()) == z);
  }
}

TEST_CASE("inner-product automorphism groups") {
  // central unit-circle point
  CHECK(spinors::in_aut(mv("3/5+4/5*i")));
  CHECK(spinors::in_5d_aut(mv("3/5+4/5*i")));
  // e0e4 reflects both timelike axes but keeps the spacetime slice closed
  CHECK(spinors::in_aut(mv("e0*e4")));
  CHECK(spinors::in_5d_aut(mv("e0*e4")));
  // a rotor in the two-times plane mixes e0 with e4
  CHECK(spinors::in_aut(mv("3/5+4/5*e0*e4")));
  CHECK_FALSE(spinors::in_5d_aut(mv("3/5+4/5*e0*e4")));
  // norm -1 elements are not automorphisms
  CHECK_FALSE(spinors::in_aut(mv("e0*e1")));
  // reduced Pin(1,3) images land in both groups
  Rng rng(kDefaultSeed ^ 6);
  int seen = 0;
  while (seen < 8) {
    const Multivector x13 = random_pin_element(Signature::cl13(), rng);
    if (x13.clifford_conjugation() * x13 != Multivector::scalar(Signature::cl13(), 1)) continue;
    ++seen;
    const Multivector x = embed::trivial_embed_real(x13);
    CHECK(spinors::in_aut(x));
    CHECK(spinors::in_5d_aut(x));
  }
  // invariance of the inner product under automorphisms
  const auto& space = dirac_space();
  const Multivector x = mv("3/5+4/5*i");
  for (int t = 0; t < 10; ++t) {
    const Multivector psi = random_spinor(space, rng);
    const Multivector phi = random_spinor(space, rng);
    CHECK(spinors::inner_product(space, x * psi, x * phi, Antimorphism::Conjugation) ==
          spinors::inner_product(space, psi, phi, Antimorphism::Conjugation));
  }
}

TEST_CASE("one-dimensional demo: the ideal of the unit is the whole algebra") {
  const Signature cl01 = Signature::from_pq(0, 1);
  const Multivector one = Multivector::scalar(cl01, 1);
  CHECK(spinors::is_idempotent(one));
  CHECK(spinors::is_primitive(one));  // the algebra is a division ring
  const spinors::SpinorSpace space(spinors::Idempotent::certify(one));
  CHECK(space.real_basis().size() == 2);
  CHECK(space.k() == 1);
  CHECK(space.real_basis()[0] == one);
  CHECK(space.real_basis()[1] == Multivector::basis_vector(cl01, 0));
}
