#include "cliff/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cliff/embeddings.hpp"
#include "cliff/errors.hpp"
#include "cliff/expr.hpp"
#include "cliff/groups.hpp"
#include "cliff/spinors.hpp"

namespace cliff::verify {

namespace {

using CheckFn = std::function<bool(Rng&, std::string&)>;

struct Check {
  std::string id;
  std::string property;
  CheckFn fn;
};

CheckResult run_check(const Check& check, std::uint64_t seed) {
  CheckResult result;
  result.id = check.id;
  result.property = check.property;
  // Per-check generator keyed on the id so suite composition never shifts
  // the draws of another check.
  Rng rng(seed ^ std::hash<std::string>{}(check.id));
  try {
    result.pass = check.fn(rng, result.detail);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

const Signature& sig23() {
  static const Signature s = Signature::cl23();
  return s;
}
const Signature& sig13() {
  static const Signature s = Signature::cl13();
  return s;
}

Multivector mv23(const std::string& text) {
  return expr::evaluate(expr::parse(text, expr::Mode::Cl23));
}

bool expect(bool condition, const std::string& note, std::string& detail) {
  if (!condition && detail.empty()) detail = note;
  return condition;
}

// ---------------------------------------------------------------- core

std::vector<Check> core_checks() {
  std::vector<Check> checks;

  checks.push_back({"core.01-grade-dimensions",
                    "dim Cl(2,3) = 32 split into grade dimensions 1,5,10,10,5,1",
                    [](Rng&, std::string& detail) {
                      const int expected[6] = {1, 5, 10, 10, 5, 1};
                      int counts[6] = {0, 0, 0, 0, 0, 0};
                      for (BladeMask m : canonical_blades(5)) counts[grade(m)]++;
                      for (int k = 0; k <= 5; ++k)
                        if (!expect(counts[k] == expected[k], "grade count mismatch", detail))
                          return false;
                      return expect(sig23().blade_count() == 32, "dimension mismatch", detail);
                    }});

  checks.push_back({"core.02-generator-relations",
                    "e_A e_B + e_B e_A = 2 g_AB for all generator pairs",
                    [](Rng&, std::string& detail) {
                      for (int a = 0; a < 5; ++a)
                        for (int b = 0; b < 5; ++b) {
                          const Multivector ea = Multivector::basis_vector(sig23(), a);
                          const Multivector eb = Multivector::basis_vector(sig23(), b);
                          const Rational g = a == b ? Rational(sig23().metric(a)) : Rational(0);
                          if (ea * eb + eb * ea != Multivector::scalar(sig23(), 2 * g))
                            return expect(false, "anticommutator mismatch", detail);
                        }
                      return true;
                    }});

  checks.push_back({"core.03-associativity",
                    "(ab)c = a(bc) exhaustively on blades and on random multivectors",
                    [](Rng& rng, std::string& detail) {
                      for (BladeMask a = 0; a < 32; ++a)
                        for (BladeMask b = 0; b < 32; ++b)
                          for (BladeMask c = 0; c < 32; ++c) {
                            const Multivector ma = Multivector::basis_blade(sig23(), a);
                            const Multivector mb = Multivector::basis_blade(sig23(), b);
                            const Multivector mc = Multivector::basis_blade(sig23(), c);
                            if ((ma * mb) * mc != ma * (mb * mc))
                              return expect(false, "blade triple failed", detail);
                          }
                      for (int t = 0; t < 25; ++t) {
                        const Multivector a = random_multivector(sig23(), rng);
                        const Multivector b = random_multivector(sig23(), rng);
                        const Multivector c = random_multivector(sig23(), rng);
                        if ((a * b) * c != a * (b * c))
                          return expect(false, "random triple failed", detail);
                      }
                      return true;
                    }});

  checks.push_back({"core.04-antimorphism-laws",
                    "t(ab)=t(b)t(a), conj(ab)=conj(b)conj(a), alpha(ab)=alpha(a)alpha(b)",
                    [](Rng&, std::string& detail) {
                      for (BladeMask a = 0; a < 32; ++a)
                        for (BladeMask b = 0; b < 32; ++b) {
                          const Multivector ma = Multivector::basis_blade(sig23(), a);
                          const Multivector mb = Multivector::basis_blade(sig23(), b);
                          const Multivector ab = ma * mb;
                          if (ab.reversion() != mb.reversion() * ma.reversion())
                            return expect(false, "reversion law failed", detail);
                          if (ab.clifford_conjugation() !=
                              mb.clifford_conjugation() * ma.clifford_conjugation())
                            return expect(false, "conjugation law failed", detail);
                          if (ab.grade_involution() !=
                              ma.grade_involution() * mb.grade_involution())
                            return expect(false, "involution law failed", detail);
                        }
                      return true;
                    }});

  checks.push_back({"core.05-involution-order",
                    "t, alpha and conj are involutions and conj = t(alpha(x)) = alpha(t(x))",
                    [](Rng& rng, std::string& detail) {
                      for (int t = 0; t < 50; ++t) {
                        const Multivector x = random_multivector(sig23(), rng);
                        if (x.reversion().reversion() != x ||
                            x.grade_involution().grade_involution() != x ||
                            x.clifford_conjugation().clifford_conjugation() != x)
                          return expect(false, "involution squared is not the identity", detail);
                        if (x.clifford_conjugation() != x.grade_involution().reversion() ||
                            x.clifford_conjugation() != x.reversion().grade_involution())
                          return expect(false, "conjugation factorization failed", detail);
                      }
                      return true;
                    }});

  checks.push_back({"core.06-even-odd-split",
                    "the even part is a subalgebra and odd*odd lands in it",
                    [](Rng&, std::string& detail) {
                      for (BladeMask a = 0; a < 32; ++a)
                        for (BladeMask b = 0; b < 32; ++b) {
                          const Multivector p = Multivector::basis_blade(sig23(), a) *
                                                Multivector::basis_blade(sig23(), b);
                          const bool even_inputs = (grade(a) + grade(b)) % 2 == 0;
                          if (even_inputs && !p.is_even())
                            return expect(false, "parity violated", detail);
                          if (!even_inputs && !p.is_odd())
                            return expect(false, "parity violated", detail);
                        }
                      return true;
                    }});

  checks.push_back({"core.07-norm-on-vectors",
                    "N(v) = -Phi(v) for basis vectors and random rational vectors",
                    [](Rng& rng, std::string& detail) {
                      for (int a = 0; a < 5; ++a) {
                        const Multivector e = Multivector::basis_vector(sig23(), a);
                        if (e.norm() != Multivector::scalar(sig23(), -sig23().metric(a)))
                          return expect(false, "basis vector norm failed", detail);
                      }
                      for (int t = 0; t < 50; ++t) {
                        const Multivector v = random_vector(sig23(), rng);
                        Rational phi(0);
                        for (int a = 0; a < 5; ++a) {
                          const Rational c = v.coeff(BladeMask{1} << a);
                          phi += Rational(sig23().metric(a)) * c * c;
                        }
                        if (v.norm() != Multivector::scalar(sig23(), -phi))
                          return expect(false, "random vector norm failed", detail);
                      }
                      return true;
                    }});

  checks.push_back({"core.08-wedge",
                    "wedge kills repeated factors and anticommutes on vectors",
                    [](Rng& rng, std::string& detail) {
                      const Multivector e0 = mv23("e0"), e1 = mv23("e1");
                      if (!wedge_product(e0, e0).is_zero())
                        return expect(false, "e0^e0 nonzero", detail);
                      if (wedge_product(e0, e1) != mv23("e0*e1"))
                        return expect(false, "e0^e1 mismatch", detail);
                      for (int t = 0; t < 50; ++t) {
                        const Multivector v = random_vector(sig23(), rng);
                        const Multivector w = random_vector(sig23(), rng);
                        if (!(wedge_product(v, w) + wedge_product(w, v)).is_zero())
                          return expect(false, "vector antisymmetry failed", detail);
                      }
                      return true;
                    }});

  checks.push_back({"core.09-grade-projection",
                    "grade components are idempotent projections summing to the element",
                    [](Rng& rng, std::string& detail) {
                      for (int t = 0; t < 50; ++t) {
                        const Multivector x = random_multivector(sig23(), rng);
                        Multivector sum = Multivector::zero(sig23());
                        for (int k = 0; k <= 5; ++k) {
                          const Multivector part = x.grade_projection(k);
                          if (part.grade_projection(k) != part)
                            return expect(false, "projection is not idempotent", detail);
                          sum = sum + part;
                        }
                        if (sum != x) return expect(false, "projections do not sum back", detail);
                      }
                      return true;
                    }});

  checks.push_back({"core.10-center",
                    "the center is exactly span{1, i} with i^2 = -1 (exhaustive commutation)",
                    [](Rng&, std::string& detail) {
                      const Multivector i = Multivector::pseudoscalar(sig23());
                      if (i * i != Multivector::scalar(sig23(), -1))
                        return expect(false, "pseudoscalar square is not -1", detail);
                      for (BladeMask m = 0; m < 32; ++m) {
                        const bool central = center_test(Multivector::basis_blade(sig23(), m));
                        const bool expected = m == 0 || m == 31;
                        if (central != expected)
                          return expect(false, "blade centrality mismatch", detail);
                      }
                      if (!center_test(mv23("1+3*i")) || center_test(mv23("e0")))
                        return expect(false, "center membership examples failed", detail);
                      return true;
                    }});

  checks.push_back({"core.11-bivector-closure",
                    "the commutator of bivectors is a bivector (Lie subalgebra)",
                    [](Rng&, std::string& detail) {
                      std::vector<BladeMask> bivectors;
                      for (BladeMask m = 0; m < 32; ++m)
                        if (grade(m) == 2) bivectors.push_back(m);
                      for (BladeMask a : bivectors)
                        for (BladeMask b : bivectors) {
                          const Multivector ma = Multivector::basis_blade(sig23(), a);
                          const Multivector mb = Multivector::basis_blade(sig23(), b);
                          const Multivector bracket = ma * mb - mb * ma;
                          if (bracket != bracket.grade_projection(2))
                            return expect(false, "bracket left grade 2", detail);
                        }
                      return true;
                    }});

  checks.push_back({"core.12-inverse",
                    "inverse(a) a = a inverse(a) = 1 when it exists; idempotents are singular",
                    [](Rng& rng, std::string& detail) {
                      const Multivector one = Multivector::scalar(sig23(), 1);
                      for (int t = 0; t < 20; ++t) {
                        const Multivector x = random_versor(sig23(), rng);
                        const Multivector inv = x.inverse();
                        if (x * inv != one || inv * x != one)
                          return expect(false, "versor inverse failed", detail);
                      }
                      for (int t = 0; t < 20; ++t) {
                        const Multivector x = random_multivector(sig23(), rng);
                        const auto inv = x.try_inverse();
                        if (inv && (x * *inv != one || *inv * x != one))
                          return expect(false, "claimed inverse fails", detail);
                      }
                      if (spinors::dirac_idempotent().try_inverse())
                        return expect(false, "idempotent must be singular", detail);
                      if (mv23("e0").inverse() != mv23("e0"))
                        return expect(false, "inverse(e0) != e0", detail);
                      if (mv23("2").inverse() != mv23("1/2"))
                        return expect(false, "inverse(2) != 1/2", detail);
                      return true;
                    }});

  checks.push_back({"core.13-blade-product-examples",
                    "e0 e0 = 1, e2 e1 = -e1 e2, (e0e1e2e3e4)^2 = -1, (e1e2e3)^2 = +1",
                    [](Rng&, std::string& detail) {
                      return expect(mv23("e0*e0") == mv23("1"), "e0*e0", detail) &&
                             expect(mv23("e2*e1") == mv23("-e1*e2"), "e2*e1", detail) &&
                             expect(mv23("i*i") == mv23("-1"), "i^2", detail) &&
                             expect(mv23("(e1*e2*e3)^2") == mv23("1"), "(e1e2e3)^2", detail);
                    }});

  return checks;
}

// ---------------------------------------------------------------- groups

std::vector<Check> groups_checks() {
  std::vector<Check> checks;

  checks.push_back({"groups.01-adjoint-homomorphism",
                    "Ad(xy) = Ad(x) Ad(y) on sampled group elements",
                    [](Rng& rng, std::string& detail) {
                      for (int t = 0; t < 20; ++t) {
                        const Multivector x = random_versor(sig23(), rng);
                        const Multivector y = random_versor(sig23(), rng);
                        if (groups::adjoint_matrix(x * y) !=
                            groups::adjoint_matrix(x) * groups::adjoint_matrix(y))
                          return expect(false, "homomorphism failed", detail);
                      }
                      return true;
                    }});

  checks.push_back({"groups.02-orthogonality",
                    "adjoint matrices satisfy M^T g M = g exactly, det = +1 in odd dimension",
                    [](Rng& rng, std::string& detail) {
                      for (int t = 0; t < 25; ++t) {
                        const auto m = groups::adjoint_matrix(random_versor(sig23(), rng));
                        if (m.det() != 1)
                          return expect(false, "odd-dimensional adjoint with det != +1", detail);
                      }
                      for (int t = 0; t < 25; ++t) {
                        const auto m = groups::adjoint_matrix(random_versor(sig13(), rng));
                        if (m.det() != 1 && m.det() != -1)
                          return expect(false, "determinant not a unit", detail);
                      }
                      return true;
                    }});

  checks.push_back(
      {"groups.03-twisted-subset",
       "twisted group inside the Clifford group; equal in even dimension, strict in odd",
       [](Rng& rng, std::string& detail) {
         for (int t = 0; t < 15; ++t) {
           const Multivector x = random_versor(sig23(), rng);
           if (!groups::in_twisted_clifford_group(x) || !groups::in_clifford_group(x))
             return expect(false, "versor not in both groups", detail);
         }
         // 1 + i is central and invertible, hence in the Clifford group, but
         // its grade involution breaks the twisted condition.
         const Multivector witness = mv23("1+i");
         if (!groups::in_clifford_group(witness) || groups::in_twisted_clifford_group(witness))
           return expect(false, "strictness witness failed in Cl(2,3)", detail);
         // Cl(1,3): the two groups agree on a battery of elements.
         const Multivector one4 = Multivector::scalar(sig13(), 1);
         std::vector<Multivector> battery = {
             one4,
             Multivector::basis_vector(sig13(), 0),
             Multivector::basis_blade(sig13(), 0b1111),
             one4 + Multivector::basis_blade(sig13(), 0b1111),
             one4 + Multivector::basis_vector(sig13(), 0),
         };
         for (int t = 0; t < 15; ++t) battery.push_back(random_versor(sig13(), rng));
         for (int t = 0; t < 10; ++t) battery.push_back(random_multivector(sig13(), rng));
         for (const auto& x : battery)
           if (groups::in_clifford_group(x) != groups::in_twisted_clifford_group(x))
             return expect(false, "even-dimensional groups differ", detail);
         return true;
       }});

  checks.push_back({"groups.04-pin-generation",
                    "products of unit-norm vectors classify inside Pin",
                    [](Rng& rng, std::string& detail) {
                      for (int t = 0; t < 20; ++t) {
                        const auto cert = groups::classify(random_pin_element(sig23(), rng));
                        if (!cert.in_pin) return expect(false, "sample not in Pin", detail);
                        if (!cert.norm_value ||
                            !((cert.norm_value->a == 1 || cert.norm_value->a == -1) &&
                              cert.norm_value->b == 0))
                          return expect(false, "Pin norm not +-1", detail);
                      }
                      return true;
                    }});

  checks.push_back({"groups.05-spin-actions-agree",
                    "the twisted and plain adjoint actions coincide on Spin samples",
                    [](Rng& rng, std::string& detail) {
                      int seen = 0;
                      while (seen < 15) {
                        const Multivector x = random_pin_element(sig23(), rng);
                        if (!x.is_even()) continue;
                        ++seen;
                        if (groups::adjoint_matrix(x) != groups::twisted_adjoint_matrix(x))
                          return expect(false, "actions differ on Spin", detail);
                      }
                      return true;
                    }});

  checks.push_back(
      {"groups.06-kernel-structures",
       "ker(Ad|Pin): Z4 for (2,3), Z2xZ2 for (3,2), Z2 for (1,3), with identity actions",
       [](Rng&, std::string& detail) {
         if (groups::kernel_of_adjoint_on_pin(sig23()) != groups::KernelStructure::Z4)
           return expect(false, "(2,3) kernel not Z4", detail);
         if (groups::kernel_of_adjoint_on_pin(Signature::from_pq(3, 2)) !=
             groups::KernelStructure::Z2xZ2)
           return expect(false, "(3,2) kernel not Z2xZ2", detail);
         if (groups::kernel_of_adjoint_on_pin(sig13()) != groups::KernelStructure::Z2)
           return expect(false, "(1,3) kernel not Z2", detail);
         // Ad_i = id in Cl(2,3) and the twisted action of -1 = id in Cl(1,3).
         const RatMatrix id5 = RatMatrix::identity(5);
         if (groups::adjoint_matrix(Multivector::pseudoscalar(sig23())).matrix() != id5)
           return expect(false, "pseudoscalar does not act trivially", detail);
         const RatMatrix id4 = RatMatrix::identity(4);
         if (groups::twisted_adjoint_matrix(Multivector::scalar(sig13(), -1)).matrix() != id4)
           return expect(false, "-1 does not act trivially under the twisted action", detail);
         return true;
       }});

  checks.push_back(
      {"groups.07-classification-examples",
       "e0e1 is Spin not reduced-Pin; -e0e4 is reduced-Pin; idempotents and null vectors fail",
       [](Rng&, std::string& detail) {
         const auto spin_cert = groups::classify(mv23("e0*e1"));
         if (!(spin_cert.in_spin && !spin_cert.in_reduced_pin && spin_cert.norm_value &&
               spin_cert.norm_value->a == -1))
           return expect(false, "e0e1 certificate wrong", detail);
         const auto t_cert = groups::classify(mv23("-e0*e4"));
         if (!(t_cert.in_spin && t_cert.in_reduced_pin && t_cert.norm_value &&
               t_cert.norm_value->a == 1))
           return expect(false, "time-reversal certificate wrong", detail);
         const auto f_cert = groups::classify(spinors::dirac_idempotent());
         if (f_cert.in_clifford_group || f_cert.in_twisted_clifford_group || f_cert.in_pin ||
             f_cert.in_spin || f_cert.in_reduced_pin)
           return expect(false, "idempotent should fail every flag", detail);
         if (groups::in_twisted_clifford_group(mv23("e0+e1")))
           return expect(false, "null vector cannot be in the group", detail);
         return true;
       }});

  checks.push_back({"groups.08-adjoint-examples",
                    "Ad(e0) = diag(1,-1,-1,-1,-1); Ad(1) = id; twisted Ad(gamma0) = diag(-1,1,1,1)",
                    [](Rng&, std::string& detail) {
                      RatMatrix expected5(5, 5);
                      const int d5[5] = {1, -1, -1, -1, -1};
                      for (int k = 0; k < 5; ++k) expected5.at(k, k) = d5[k];
                      if (groups::adjoint_matrix(mv23("e0")).matrix() != expected5)
                        return expect(false, "Ad(e0) mismatch", detail);
                      if (groups::adjoint_matrix(mv23("1")).matrix() != RatMatrix::identity(5))
                        return expect(false, "Ad(1) not identity", detail);
                      RatMatrix expected4(4, 4);
                      const int d4[4] = {-1, 1, 1, 1};
                      for (int k = 0; k < 4; ++k) expected4.at(k, k) = d4[k];
                      const Multivector gamma0 = Multivector::basis_vector(sig13(), 0);
                      if (groups::twisted_adjoint_matrix(gamma0).matrix() != expected4)
                        return expect(false, "twisted Ad(gamma0) mismatch", detail);
                      return true;
                    }});

  return checks;
}

// ---------------------------------------------------------------- embeddings

std::vector<Check> embeddings_checks() {
  using embed::ComplexMultivector13;
  using embed::ComplexRational;
  using embed::EmbeddingKind;
  std::vector<Check> checks;

  checks.push_back(
      {"embeddings.01-roundtrip",
       "extract(embed(x)) = x on all 16 blades times {1, I} for both embeddings",
       [](Rng& rng, std::string& detail) {
         for (const EmbeddingKind kind : {EmbeddingKind::Trivial, EmbeddingKind::Twisted}) {
           for (BladeMask m = 0; m < 16; ++m) {
             const auto real_unit = ComplexMultivector13::basis_blade(m);
             const auto imag_unit = ComplexMultivector13::basis_blade(
                 m, ComplexRational{Rational(0), Rational(1)});
             if (embed::extract(embed::embed(real_unit, kind), kind) != real_unit ||
                 embed::extract(embed::embed(imag_unit, kind), kind) != imag_unit)
               return expect(false, "blade roundtrip failed", detail);
           }
           for (int t = 0; t < 20; ++t) {
             const Multivector y = random_multivector(sig23(), rng);
             if (embed::embed(embed::extract(y, kind), kind) != y)
               return expect(false, "embed(extract(y)) != y", detail);
           }
         }
         return true;
       }});

  checks.push_back({"embeddings.02-anticommutators",
                    "images of the gammas obey gamma_mu gamma_nu + gamma_nu gamma_mu = 2 eta",
                    [](Rng&, std::string& detail) {
                      for (const auto kind : {EmbeddingKind::Trivial, EmbeddingKind::Twisted}) {
                        for (int mu = 0; mu < 4; ++mu)
                          for (int nu = 0; nu < 4; ++nu) {
                            const Multivector a = embed::embed_blade(BladeMask{1} << mu, kind);
                            const Multivector b = embed::embed_blade(BladeMask{1} << nu, kind);
                            const Rational eta =
                                mu == nu ? Rational(sig13().metric(mu)) : Rational(0);
                            if (a * b + b * a != Multivector::scalar(sig23(), 2 * eta))
                              return expect(false, "anticommutator failed", detail);
                          }
                      }
                      return true;
                    }});

  checks.push_back({"embeddings.03-same-even-products",
                    "etilde_mu etilde_nu = e_mu e_nu for all 16 index pairs",
                    [](Rng&, std::string& detail) {
                      for (int mu = 0; mu < 4; ++mu)
                        for (int nu = 0; nu < 4; ++nu) {
                          const Multivector tilde =
                              embed::twisted_vector(mu) * embed::twisted_vector(nu);
                          const Multivector plain = Multivector::basis_vector(sig23(), mu) *
                                                    Multivector::basis_vector(sig23(), nu);
                          if (tilde != plain) return expect(false, "pair failed", detail);
                        }
                      return true;
                    }});

  checks.push_back(
      {"embeddings.04-ring-homomorphism",
       "embed respects sums and products (exhaustive on blade pairs, both kinds)",
       [](Rng& rng, std::string& detail) {
         for (const auto kind : {EmbeddingKind::Trivial, EmbeddingKind::Twisted}) {
           for (BladeMask a = 0; a < 16; ++a)
             for (BladeMask b = 0; b < 16; ++b) {
               const auto xa = ComplexMultivector13::basis_blade(a);
               const auto xb = ComplexMultivector13::basis_blade(b);
               if (embed::embed(xa * xb, kind) !=
                   embed::embed(xa, kind) * embed::embed(xb, kind))
                 return expect(false, "multiplicativity failed", detail);
             }
           for (int t = 0; t < 10; ++t) {
             std::vector<ComplexMultivector13::Term> ta, tb;
             for (int j = 0; j < 4; ++j) {
               ta.emplace_back(static_cast<BladeMask>(rng() % 16),
                               ComplexRational{random_rational(rng), random_rational(rng)});
               tb.emplace_back(static_cast<BladeMask>(rng() % 16),
                               ComplexRational{random_rational(rng), random_rational(rng)});
             }
             const auto xa = ComplexMultivector13::from_terms(std::move(ta));
             const auto xb = ComplexMultivector13::from_terms(std::move(tb));
             if (embed::embed(xa + xb, kind) !=
                     embed::embed(xa, kind) + embed::embed(xb, kind) ||
                 embed::embed(xa * xb, kind) !=
                     embed::embed(xa, kind) * embed::embed(xb, kind))
               return expect(false, "random homomorphism failed", detail);
           }
         }
         return true;
       }});

  checks.push_back({"embeddings.05-grade-swap",
                    "twisted embedding fixes grades 0,2,4 and swaps grades 1 and 3",
                    [](Rng&, std::string& detail) {
                      for (BladeMask m = 0; m < 16; ++m) {
                        const int g = grade(m);
                        const Multivector image =
                            embed::embed_blade(m, EmbeddingKind::Twisted);
                        const int expected = (g % 2 == 0) ? g : (g == 1 ? 3 : 1);
                        for (const auto& [mask, c] : image.terms())
                          if (grade(mask) != expected)
                            return expect(false, "grade image wrong", detail);
                      }
                      return true;
                    }});

  checks.push_back({"embeddings.06-theta-values",
                    "theta(gamma0) = e1e2e3e4, theta(gamma1gamma2gamma3) = -e0e4, identity on Spin",
                    [](Rng& rng, std::string& detail) {
                      const auto canon = embed::canonical_elements();
                      if (embed::theta(canon.P) != canon.parity5)
                        return expect(false, "theta(P) wrong", detail);
                      if (embed::theta(canon.T) != canon.time_reversal5)
                        return expect(false, "theta(T) wrong", detail);
                      int seen = 0;
                      while (seen < 10) {
                        const Multivector x = random_pin_element(sig13(), rng);
                        if (!x.is_even()) continue;
                        ++seen;
                        if (embed::theta(x) != embed::trivial_embed_real(x))
                          return expect(false, "theta should fix Spin elements", detail);
                      }
                      // the image always certifies inside Spin(2,3)
                      for (int t = 0; t < 10; ++t) {
                        const auto cert =
                            groups::classify(embed::theta(random_pin_element(sig13(), rng)));
                        if (!cert.in_spin) return expect(false, "image not in Spin(2,3)", detail);
                      }
                      return true;
                    }});

  checks.push_back(
      {"embeddings.07-diagram",
       "Ad(theta(x)) = ell(Ad(x)) for all words of length <= 4 in the gammas and 200 samples",
       [](Rng& rng, std::string& detail) {
         std::vector<Multivector> words = {Multivector::scalar(sig13(), 1)};
         std::vector<Multivector> frontier = words;
         for (int len = 1; len <= 4; ++len) {
           std::vector<Multivector> next;
           for (const auto& w : frontier)
             for (int mu = 0; mu < 4; ++mu)
               next.push_back(w * Multivector::basis_vector(sig13(), mu));
           words.insert(words.end(), next.begin(), next.end());
           frontier = std::move(next);
         }
         for (const auto& w : words)
           if (!embed::diagram_check(w)) return expect(false, "generator word failed", detail);
         for (int t = 0; t < 200; ++t)
           if (!embed::diagram_check(random_pin_element(sig13(), rng)))
             return expect(false, "sampled versor failed", detail);
         return true;
       }});

  checks.push_back(
      {"embeddings.08-twisted-action",
       "Ad_x(v~) = +-(Ad_x v)~ with the sign set by the parity of x",
       [](Rng& rng, std::string& detail) {
         for (int mu = 0; mu < 4; ++mu)
           for (int nu = 0; nu < 4; ++nu)
             if (!embed::twisted_action_check(Multivector::basis_vector(sig13(), mu),
                                              Multivector::basis_vector(sig13(), nu)))
               return expect(false, "generator pair failed", detail);
         for (int t = 0; t < 100; ++t) {
           const Multivector x = random_pin_element(sig13(), rng);
           const Multivector v = random_vector(sig13(), rng);
           if (!embed::twisted_action_check(x, v))
             return expect(false, "sampled pair failed", detail);
         }
         return true;
       }});

  checks.push_back(
      {"embeddings.09-ell",
       "ell extends O(1,3) into SO(2,3): parity and time reversal instances",
       [](Rng&, std::string& detail) {
         RatMatrix parity(4, 4);
         const int dp[4] = {1, -1, -1, -1};
         for (int k = 0; k < 4; ++k) parity.at(k, k) = dp[k];
         RatMatrix expected(5, 5);
         const int de[5] = {1, -1, -1, -1, -1};
         for (int k = 0; k < 5; ++k) expected.at(k, k) = de[k];
         if (embed::ell(parity).matrix() != expected)
           return expect(false, "parity extension wrong", detail);
         if (embed::ell(RatMatrix::identity(4)).matrix() != RatMatrix::identity(5))
           return expect(false, "identity extension wrong", detail);
         RatMatrix timerev(4, 4);
         const int dt[4] = {-1, 1, 1, 1};
         for (int k = 0; k < 4; ++k) timerev.at(k, k) = dt[k];
         RatMatrix expected_t(5, 5);
         const int det_[5] = {-1, 1, 1, 1, -1};
         for (int k = 0; k < 5; ++k) expected_t.at(k, k) = det_[k];
         if (embed::ell(timerev).matrix() != expected_t)
           return expect(false, "time-reversal extension wrong", detail);
         if (embed::ell(parity).det() != 1)
           return expect(false, "extension must land in SO", detail);
         return true;
       }});

  checks.push_back(
      {"embeddings.10-canonical-adjoints",
       "Ad of the parity and time-reversal images; their product fixes the fifth axis",
       [](Rng&, std::string& detail) {
         const auto canon = embed::canonical_elements();
         RatMatrix ad_p(5, 5), ad_t(5, 5);
         const int dp[5] = {1, -1, -1, -1, -1};
         const int dt[5] = {-1, 1, 1, 1, -1};
         for (int k = 0; k < 5; ++k) {
           ad_p.at(k, k) = dp[k];
           ad_t.at(k, k) = dt[k];
         }
         if (groups::adjoint_matrix(canon.parity5).matrix() != ad_p)
           return expect(false, "Ad of parity image wrong", detail);
         if (groups::adjoint_matrix(canon.time_reversal5).matrix() != ad_t)
           return expect(false, "Ad of time-reversal image wrong", detail);
         const auto combined =
             groups::adjoint_matrix(canon.parity5 * canon.time_reversal5);
         if (combined.matrix().at(4, 4) != 1)
           return expect(false, "combined action must fix the fifth axis", detail);
         return true;
       }});

  return checks;
}

// ---------------------------------------------------------------- spinors

std::vector<Check> spinors_checks() {
  using spinors::Antimorphism;
  using spinors::KMatrix;
  using spinors::KScalar;
  std::vector<Check> checks;

  // one shared space per suite run; construction is cheap
  auto make_space = [] {
    return spinors::SpinorSpace(spinors::Idempotent::certify(spinors::dirac_idempotent()));
  };

  checks.push_back({"spinors.01-idempotent",
                    "f is a primitive idempotent with conj(f) = f and rev(f) != f",
                    [](Rng&, std::string& detail) {
                      const Multivector f = spinors::dirac_idempotent();
                      if (!spinors::is_idempotent(f)) return expect(false, "f^2 != f", detail);
                      if (!spinors::is_primitive(f)) return expect(false, "f not primitive", detail);
                      if (f.clifford_conjugation() != f)
                        return expect(false, "conj(f) != f", detail);
                      if (f.reversion() == f) return expect(false, "rev(f) == f", detail);
                      const Multivector half_factor = mv23("1/2*(1+e1*e2*e3)");
                      if (!spinors::is_idempotent(half_factor) ||
                          spinors::is_primitive(half_factor))
                        return expect(false, "single factor must be non-primitive", detail);
                      const Multivector one = mv23("1");
                      if (!spinors::is_idempotent(one) || spinors::is_primitive(one))
                        return expect(false, "1 must be idempotent and non-primitive", detail);
                      if (spinors::is_idempotent(mv23("1/2*(1+e2*e3*e4)")))
                        return expect(false, "wrong-sign factor is not idempotent", detail);
                      return true;
                    }});

  checks.push_back({"spinors.02-e4-reduction",
                    "e4 f = -i e0 f, so the ideal splits as Cl(1,3)f + i Cl(1,3)f",
                    [](Rng&, std::string& detail) {
                      const Multivector f = spinors::dirac_idempotent();
                      if (!spinors::e4_reduction_check(f))
                        return expect(false, "reduction identity failed", detail);
                      // the identity is equivalent to (1+e1e2e3) e4 f = 0, so it
                      // follows the sign of the first factor alone
                      const Multivector second_flipped =
                          mv23("1/2*(1+e1*e2*e3)") * mv23("1/2*(1+e0*e3*e4)");
                      if (!spinors::e4_reduction_check(second_flipped))
                        return expect(false, "second-factor sign must not matter", detail);
                      const Multivector first_flipped =
                          mv23("1/2*(1-e1*e2*e3)") * mv23("1/2*(1-e0*e3*e4)");
                      if (spinors::e4_reduction_check(first_flipped))
                        return expect(false, "flipped first factor must fail", detail);
                      // span{blade4 f, i blade4 f} covers the whole ideal
                      IncrementalSpan span(32);
                      const Multivector i = Multivector::pseudoscalar(sig23());
                      for (BladeMask m = 0; m < 16; ++m) {
                        const Multivector base = Multivector::basis_blade(sig23(), m) * f;
                        if (!base.is_zero()) span.add(coordinates(base));
                        const Multivector imag = i * base;
                        if (!imag.is_zero()) span.add(coordinates(imag));
                      }
                      return expect(span.rank() == 8, "split rank wrong", detail);
                    }});

  checks.push_back({"spinors.03-ideal-dimension",
                    "the minimal left ideal has real dimension 8 = dim K times k",
                    [make_space](Rng&, std::string& detail) {
                      const auto space = make_space();
                      return expect(space.real_basis().size() == 8, "real dimension", detail) &&
                             expect(space.k() == 4, "K-dimension", detail);
                    }});

  checks.push_back({"spinors.04-k-basis",
                    "the K-basis is {f, e1 f, e0 f, e0e1 f} with the diagonal etilde0 action",
                    [make_space](Rng&, std::string& detail) {
                      const auto space = make_space();
                      const Multivector f = space.idempotent();
                      const std::vector<Multivector> expected = {
                          f, mv23("e1") * f, mv23("e0") * f, mv23("e0*e1") * f};
                      for (std::size_t j = 0; j < 4; ++j) {
                        if (space.k_basis()[j] != expected[j])
                          return expect(false, "basis element mismatch", detail);
                        if (space.k_basis()[j] * f != space.k_basis()[j])
                          return expect(false, "right ideal property failed", detail);
                      }
                      const Multivector g0 = embed::twisted_vector(0);
                      const int signs[4] = {1, 1, -1, -1};
                      for (std::size_t j = 0; j < 4; ++j)
                        if (g0 * space.k_basis()[j] !=
                            Rational(signs[j]) * space.k_basis()[j])
                          return expect(false, "etilde0 action mismatch", detail);
                      return true;
                    }});

  checks.push_back({"spinors.05-find-s",
                    "the blade scan returns 1 for conjugation and e0e1 for reversion",
                    [make_space](Rng&, std::string& detail) {
                      const Multivector f = spinors::dirac_idempotent();
                      const Multivector s_conj = spinors::find_s(f, Antimorphism::Conjugation);
                      const Multivector s_rev = spinors::find_s(f, Antimorphism::Reversion);
                      if (s_conj != mv23("1")) return expect(false, "conjugation s", detail);
                      if (s_rev != mv23("e0*e1")) return expect(false, "reversion s", detail);
                      // defining condition s f' s^-1 = f
                      if (s_rev * f.reversion() * s_rev.inverse() != f)
                        return expect(false, "s does not conjugate back", detail);
                      return true;
                    }});

  checks.push_back(
      {"spinors.06-gram-conjugation",
       "h_ij = conj(u_i) u_j = diag(1,1,-1,-1), self-inverse and hermitian",
       [make_space](Rng&, std::string& detail) {
         const auto space = make_space();
         const KMatrix h = spinors::gram_matrix(space, Antimorphism::Conjugation);
         KMatrix expected(4);
         const int d[4] = {1, 1, -1, -1};
         for (int j = 0; j < 4; ++j) expected.at(j, j) = KScalar{Rational(d[j]), Rational(0)};
         if (h != expected) return expect(false, "Gram mismatch", detail);
         const auto inv = h.inverse();
         if (!inv || *inv != h) return expect(false, "Gram is not self-inverse", detail);
         for (int r = 0; r < 4; ++r)
           for (int c = 0; c < 4; ++c)
             if (h.at(r, c) != h.at(c, r).conj())
               return expect(false, "Gram not hermitian", detail);
         return true;
       }});

  checks.push_back(
      {"spinors.07-gram-reversion",
       "reversion Gram is the antidiagonal (0,0,0,1;0,0,-1,0;0,1,0,0;-1,0,0,0), "
       "anti-hermitian since rev(s) = -s, and non-degenerate",
       [make_space](Rng&, std::string& detail) {
         const auto space = make_space();
         const KMatrix h = spinors::gram_matrix(space, Antimorphism::Reversion);
         KMatrix expected(4);
         expected.at(0, 3) = KScalar::one();
         expected.at(1, 2) = -KScalar::one();
         expected.at(2, 1) = KScalar::one();
         expected.at(3, 0) = -KScalar::one();
         if (h != expected) return expect(false, "reversion Gram mismatch", detail);
         // with the reversion star being the identity, h_ij = -h_ji
         for (int r = 0; r < 4; ++r)
           for (int c = 0; c < 4; ++c)
             if (h.at(r, c) !=
                 -spinors::scalar_conjugation(space, h.at(c, r), Antimorphism::Reversion))
               return expect(false, "anti-hermitian structure failed", detail);
         return expect(h.inverse().has_value(), "reversion Gram degenerate", detail);
       }});

  checks.push_back({"spinors.08-scalar-conjugation",
                    "the conjugation star is (a,b) -> (a,-b); the reversion star is the identity",
                    [make_space](Rng& rng, std::string& detail) {
                      const auto space = make_space();
                      for (int t = 0; t < 20; ++t) {
                        const KScalar lambda{random_rational(rng), random_rational(rng)};
                        const KScalar conj_star =
                            spinors::scalar_conjugation(space, lambda, Antimorphism::Conjugation);
                        if (conj_star != KScalar{lambda.a, -lambda.b})
                          return expect(false, "conjugation star wrong", detail);
                        const KScalar rev_star =
                            spinors::scalar_conjugation(space, lambda, Antimorphism::Reversion);
                        if (rev_star != lambda)
                          return expect(false, "reversion star wrong", detail);
                      }
                      const KScalar unit = KScalar::one();
                      return expect(
                          spinors::scalar_conjugation(space, unit, Antimorphism::Conjugation) ==
                                  unit &&
                              spinors::scalar_conjugation(space, unit, Antimorphism::Reversion) ==
                                  unit,
                          "unit must be fixed", detail);
                    }});

  checks.push_back(
      {"spinors.09-dual-basis",
       "u~^i u_j = delta f, u~^3 = -conj(u_3), dual spinor components are (psi^dagger gamma0)_j",
       [make_space](Rng& rng, std::string& detail) {
         const auto space = make_space();
         for (std::size_t r = 0; r < 4; ++r)
           for (std::size_t c = 0; c < 4; ++c) {
             const KScalar value = space.to_k_scalar(space.dual_basis()[r] * space.k_basis()[c]);
             const KScalar expected =
                 r == c ? KScalar::one() : KScalar{Rational(0), Rational(0)};
             if (value != expected) return expect(false, "duality relation failed", detail);
           }
         if (space.dual_basis()[2] != -(space.k_basis()[2].clifford_conjugation()))
           return expect(false, "u~^3 != -conj(u_3)", detail);
         // dual of psi under the conjugation product: conj(psi) u_j = sum_i
         // conj(lambda_i) h_ij
         const KMatrix h = spinors::gram_matrix(space, Antimorphism::Conjugation);
         for (int t = 0; t < 10; ++t) {
           std::vector<KScalar> lambda;
           Multivector psi = Multivector::zero(sig23());
           for (std::size_t j = 0; j < 4; ++j) {
             lambda.push_back(KScalar{random_rational(rng), random_rational(rng)});
             psi = psi + space.k_basis()[j] * space.from_k_scalar(lambda[j]);
           }
           for (std::size_t j = 0; j < 4; ++j) {
             KScalar expected;
             for (std::size_t i2 = 0; i2 < 4; ++i2)
               expected = expected + lambda[i2].conj() * h.at(i2, j);
             if (space.to_k_scalar(psi.clifford_conjugation() * space.k_basis()[j]) != expected)
               return expect(false, "dual spinor components mismatch", detail);
           }
         }
         return true;
       }});

  checks.push_back(
      {"spinors.10-matrix-rep",
       "rep is a unital homomorphism; rep(etilde0) = diag(1,1,-1,-1); rep(i) = i Id",
       [make_space](Rng& rng, std::string& detail) {
         const auto space = make_space();
         KMatrix g0(4);
         const int d[4] = {1, 1, -1, -1};
         for (int j = 0; j < 4; ++j) g0.at(j, j) = KScalar{Rational(d[j]), Rational(0)};
         if (spinors::matrix_rep(space, embed::twisted_vector(0)) != g0)
           return expect(false, "rep(etilde0) mismatch", detail);
         if (spinors::matrix_rep(space, mv23("1")) != KMatrix::identity(4))
           return expect(false, "rep(1) not identity", detail);
         KMatrix i_id(4);
         for (int j = 0; j < 4; ++j) i_id.at(j, j) = KScalar{Rational(0), Rational(1)};
         if (spinors::matrix_rep(space, Multivector::pseudoscalar(sig23())) != i_id)
           return expect(false, "rep(i) mismatch", detail);
         // anticommutators of the twisted images
         for (int mu = 0; mu < 4; ++mu)
           for (int nu = 0; nu < 4; ++nu) {
             const KMatrix a = spinors::matrix_rep(space, embed::twisted_vector(mu));
             const KMatrix b = spinors::matrix_rep(space, embed::twisted_vector(nu));
             KMatrix expected(4);
             if (mu == nu)
               for (int j = 0; j < 4; ++j)
                 expected.at(j, j) = KScalar{Rational(2 * sig13().metric(mu)), Rational(0)};
             if (a * b + b * a != expected)
               return expect(false, "rep anticommutator failed", detail);
           }
         for (int t = 0; t < 100; ++t) {
           const Multivector a = random_multivector(sig23(), rng);
           const Multivector b = random_multivector(sig23(), rng);
           if (spinors::matrix_rep(space, a * b) !=
               spinors::matrix_rep(space, a) * spinors::matrix_rep(space, b))
             return expect(false, "rep homomorphism failed", detail);
         }
         // injectivity on the 32 blades
         std::vector<KMatrix> images;
         for (BladeMask m = 0; m < 32; ++m) {
           const KMatrix rep =
               spinors::matrix_rep(space, Multivector::basis_blade(sig23(), m));
           for (const auto& prev : images)
             if (prev == rep) return expect(false, "rep not injective on blades", detail);
           images.push_back(rep);
         }
         return true;
       }});

  checks.push_back({"spinors.11-matrix-adjoint",
                    "rep(gamma0 conj(A) gamma0) is the conjugate transpose of rep(A)",
                    [make_space](Rng& rng, std::string& detail) {
                      const auto space = make_space();
                      for (BladeMask m = 0; m < 32; ++m)
                        if (!spinors::matrix_adjoint_check(
                                space, Multivector::basis_blade(sig23(), m)))
                          return expect(false, "blade adjoint identity failed", detail);
                      for (int t = 0; t < 100; ++t)
                        if (!spinors::matrix_adjoint_check(space,
                                                           random_multivector(sig23(), rng)))
                          return expect(false, "random adjoint identity failed", detail);
                      // gamma_mu^dagger = gamma0 gamma_mu gamma0 on the twisted images
                      for (int mu = 0; mu < 4; ++mu) {
                        const Multivector g0 = embed::twisted_vector(0);
                        const Multivector gmu = embed::twisted_vector(mu);
                        const KMatrix dagger = spinors::matrix_rep(space, gmu).conj_transpose();
                        if (dagger != spinors::matrix_rep(space, g0 * gmu * g0))
                          return expect(false, "gamma dagger identity failed", detail);
                      }
                      return true;
                    }});

  checks.push_back(
      {"spinors.12-complete-set",
       "u_i u~^i sums to 1, the family is orthogonal, and E_ij E_lk = delta_jl E_ik",
       [make_space](Rng&, std::string& detail) {
         const auto space = make_space();
         const auto set = spinors::complete_idempotent_set(space);
         if (set.f[0] != space.idempotent())
           return expect(false, "f_1 is not the seed idempotent", detail);
         Multivector sum = Multivector::zero(sig23());
         for (const auto& fi : set.f) sum = sum + fi;
         if (sum != mv23("1")) return expect(false, "sum != 1", detail);
         for (std::size_t a = 0; a < 4; ++a)
           for (std::size_t b = 0; b < 4; ++b)
             if (set.f[a] * set.f[b] !=
                 (a == b ? set.f[a] : Multivector::zero(sig23())))
               return expect(false, "orthogonality failed", detail);
         for (std::size_t a = 0; a < 4; ++a)
           for (std::size_t b = 0; b < 4; ++b)
             for (std::size_t c = 0; c < 4; ++c)
               for (std::size_t d = 0; d < 4; ++d)
                 if (set.units[a][b] * set.units[c][d] !=
                     (b == c ? set.units[a][d] : Multivector::zero(sig23())))
                   return expect(false, "matrix-unit relation failed", detail);
         if (set.units[0][1] * set.units[1][0] != set.f[0])
           return expect(false, "E12 E21 != f1", detail);
         return true;
       }});

  checks.push_back({"spinors.13-peirce",
                    "the Peirce cells f_i Cl f_j have dimension 2 each and tile all 32 dimensions",
                    [make_space](Rng&, std::string& detail) {
                      const auto space = make_space();
                      if (!spinors::peirce_check(space))
                        return expect(false, "Peirce decomposition failed", detail);
                      const auto set = spinors::complete_idempotent_set(space);
                      // a spot product across mismatched cells vanishes
                      const Multivector a12 =
                          set.f[0] * mv23("e0*e2") * set.f[1];
                      const Multivector a34 = set.f[2] * mv23("e1*e3") * set.f[3];
                      return expect((a12 * a34).is_zero(), "A12 A34 != 0", detail);
                    }});

  checks.push_back(
      {"spinors.14-radon-hurwitz",
       "r_0..r_7 = 0,1,2,2,3,3,3,3 with r_{j+8} = r_j + 4; (2,3) has exponent 2",
       [](Rng&, std::string& detail) {
         const int expected[8] = {0, 1, 2, 2, 3, 3, 3, 3};
         for (int j = 0; j < 8; ++j)
           if (spinors::radon_hurwitz(j) != expected[j])
             return expect(false, "table mismatch", detail);
         if (spinors::radon_hurwitz(9) != 5) return expect(false, "r_9 != 5", detail);
         if (spinors::radon_hurwitz(-1) != -1)
           return expect(false, "downward rule failed", detail);
         if (spinors::idempotent_exponent(sig23()) != 2)
           return expect(false, "(2,3) exponent != 2", detail);
         detail =
             "note: q - r_{q-p} = 2 counts the commuting idempotent factors; the complete "
             "orthogonal set itself has 2^2 = 4 members, matching the 4x4 matrix algebra";
         return true;
       }});

  checks.push_back(
      {"spinors.15-inner-product-axioms",
       "hermitian symmetry, additivity, right K-linearity and adjointness both ways",
       [make_space](Rng& rng, std::string& detail) {
         const auto space = make_space();
         auto random_spinor = [&](Rng& r) {
           Multivector psi = Multivector::zero(sig23());
           for (std::size_t j = 0; j < 4; ++j)
             psi = psi + space.k_basis()[j] *
                             space.from_k_scalar(KScalar{random_rational(r), random_rational(r)});
           return psi;
         };
         for (int t = 0; t < 20; ++t) {
           const Multivector psi = random_spinor(rng);
           const Multivector phi = random_spinor(rng);
           const Multivector chi = random_spinor(rng);
           const KScalar lambda{random_rational(rng), random_rational(rng)};
           for (const auto anti : {Antimorphism::Conjugation, Antimorphism::Reversion}) {
             const KScalar h_pp = spinors::inner_product(space, psi, phi, anti);
             // additivity and right linearity
             if (spinors::inner_product(space, psi, phi + chi, anti) !=
                 h_pp + spinors::inner_product(space, psi, chi, anti))
               return expect(false, "additivity failed", detail);
             if (spinors::inner_product(space, psi, phi * space.from_k_scalar(lambda), anti) !=
                 h_pp * lambda)
               return expect(false, "right linearity failed", detail);
           }
           // hermitian symmetry for the conjugation product
           const KScalar h = spinors::inner_product(space, psi, phi, Antimorphism::Conjugation);
           const KScalar h_swapped =
               spinors::inner_product(space, phi, psi, Antimorphism::Conjugation);
           if (h != h_swapped.conj()) return expect(false, "hermitian symmetry failed", detail);
           // adjointness:  h(a psi, phi) = h(psi, a' phi)
           const Multivector a = random_multivector(sig23(), rng);
           if (spinors::inner_product(space, a * psi, phi, Antimorphism::Conjugation) !=
               spinors::inner_product(space, psi, a.clifford_conjugation() * phi,
                                      Antimorphism::Conjugation))
             return expect(false, "conjugation adjointness failed", detail);
           if (spinors::inner_product(space, a * psi, phi, Antimorphism::Reversion) !=
               spinors::inner_product(space, psi, a.reversion() * phi, Antimorphism::Reversion))
             return expect(false, "reversion adjointness failed", detail);
         }
         // sesquilinearity pinned on the basis: h(u1, u1 lambda) = lambda
         const KScalar probe{Rational(5, 3), Rational(-2)};
         if (spinors::inner_product(space, space.k_basis()[0],
                                    space.k_basis()[0] * space.from_k_scalar(probe),
                                    Antimorphism::Conjugation) != probe)
           return expect(false, "h(u1, u1 lambda) != lambda", detail);
         // off-diagonal and diagonal pins
         if (!spinors::inner_product(space, space.k_basis()[0], space.k_basis()[1],
                                     Antimorphism::Conjugation)
                  .is_zero())
           return expect(false, "h(u1, u2) != 0", detail);
         if (spinors::inner_product(space, space.k_basis()[2], space.k_basis()[2],
                                    Antimorphism::Conjugation) !=
             KScalar{Rational(-1), Rational(0)})
           return expect(false, "h(u3, u3) != -1", detail);
         return true;
       }});

  checks.push_back(
      {"spinors.16-invariance",
       "h(x psi, x phi) = h(psi, phi) whenever conj(x) x = 1",
       [make_space](Rng& rng, std::string& detail) {
         const auto space = make_space();
         auto random_spinor = [&](Rng& r) {
           Multivector psi = Multivector::zero(sig23());
           for (std::size_t j = 0; j < 4; ++j)
             psi = psi + space.k_basis()[j] *
                             space.from_k_scalar(KScalar{random_rational(r), random_rational(r)});
           return psi;
         };
         int seen = 0;
         while (seen < 15) {
           const Multivector x = random_pin_element(sig23(), rng);
           if (x.clifford_conjugation() * x != mv23("1")) continue;
           ++seen;
           const Multivector psi = random_spinor(rng);
           const Multivector phi = random_spinor(rng);
           if (spinors::inner_product(space, x * psi, x * phi, Antimorphism::Conjugation) !=
               spinors::inner_product(space, psi, phi, Antimorphism::Conjugation))
             return expect(false, "invariance failed", detail);
         }
         return true;
       }});

  checks.push_back(
      {"spinors.17-reconstruction",
       "phi^-1(phi(z)) = z on the center and A = sum central(A^i_j) u_i u~^j",
       [make_space](Rng& rng, std::string& detail) {
         const auto space = make_space();
         for (int t = 0; t < 10; ++t) {
           const KScalar z{random_rational(rng), random_rational(rng)};
           const Multivector central = space.central_from_k(z);
           // phi maps z to z f; phi^-1 recovers the central element
           if (space.to_k_scalar(central * space.idempotent()) != z)
             return expect(false, "phi roundtrip failed", detail);
         }
         for (int t = 0; t < 20; ++t) {
           const Multivector a = random_multivector(sig23(), rng);
           if (spinors::reconstruct(space, spinors::matrix_rep(space, a)) != a)
             return expect(false, "reconstruction failed", detail);
         }
         return true;
       }});

  checks.push_back(
      {"spinors.18-aut-groups",
       "central unit circle points and Pin(1,3) images are automorphisms; plane "
       "rotors mixing e4 are not closed on the spacetime slice",
       [](Rng& rng, std::string& detail) {
         const Multivector circle = mv23("3/5+4/5*i");
         if (!spinors::in_aut(circle) || !spinors::in_5d_aut(circle))
           return expect(false, "unit circle point rejected", detail);
         // e0e4 reflects e0 and e4 but keeps all five axes, so it stays closed
         const Multivector plane = mv23("e0*e4");
         if (!spinors::in_aut(plane) || !spinors::in_5d_aut(plane))
           return expect(false, "e0e4 membership wrong", detail);
         // a genuine rotor in the e0-e4 plane mixes the two timelike axes
         const Multivector rotor = mv23("3/5+4/5*e0*e4");
         if (!spinors::in_aut(rotor) || spinors::in_5d_aut(rotor))
           return expect(false, "rotor 5D closure wrong", detail);
         int seen = 0;
         while (seen < 10) {
           const Multivector x13 = random_pin_element(sig13(), rng);
           if (x13.clifford_conjugation() * x13 != Multivector::scalar(sig13(), 1)) continue;
           ++seen;
           const Multivector x = embed::trivial_embed_real(x13);
           if (!spinors::in_aut(x) || !spinors::in_5d_aut(x))
             return expect(false, "reduced Pin(1,3) image rejected", detail);
         }
         return true;
       }});

  return checks;
}

std::vector<Check> checks_for(const std::string& suite) {
  if (suite == "core") return core_checks();
  if (suite == "groups") return groups_checks();
  if (suite == "embeddings") return embeddings_checks();
  if (suite == "spinors") return spinors_checks();
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& name : {"core", "groups", "embeddings", "spinors"}) {
      auto part = checks_for(name);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw Error("unknown suite '" + suite + "'");
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "core", "groups", "embeddings",
                                                 "spinors"};
  return names;
}

Report run_suite(const std::string& suite, std::uint64_t seed) {
  Report report;
  report.suite = suite;
  for (const Check& check : checks_for(suite)) report.checks.push_back(run_check(check, seed));
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id},
                      {"property", c.property},
                      {"status", c.pass ? "pass" : "fail"},
                      {"detail", c.detail}});
  return {{"suite", report.suite}, {"checks", checks}, {"exit_code", report.exit_code()}};
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.property << "\n";
    if (!c.detail.empty()) out << "       " << c.detail << "\n";
    if (c.pass) ++passed;
  }
  out << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace cliff::verify
