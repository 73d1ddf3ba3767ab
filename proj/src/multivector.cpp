#include "cliff/multivector.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliff/errors.hpp"
#include "cliff/kernels.hpp"
#include "cliff/ratmat.hpp"

namespace cliff {

void require_same_signature(const Multivector& a, const Multivector& b) {
  if (a.algebra() != b.algebra())
    throw SignatureMismatch("operands belong to different Clifford algebras");
}

Multivector Multivector::scalar(const Signature& sig, Rational c) {
  Multivector m(sig);
  if (c != 0) m.terms_.emplace_back(0, std::move(c));
  return m;
}

Multivector Multivector::basis_blade(const Signature& sig, BladeMask mask, Rational c) {
  if (mask >= sig.blade_count()) throw std::out_of_range("blade mask outside algebra");
  Multivector m(sig);
  if (c != 0) m.terms_.emplace_back(mask, std::move(c));
  return m;
}

Multivector Multivector::basis_vector(const Signature& sig, int index) {
  if (index < 0 || index >= sig.n()) throw std::out_of_range("generator index");
  return basis_blade(sig, BladeMask{1} << index);
}

Multivector Multivector::pseudoscalar(const Signature& sig) {
  return basis_blade(sig, static_cast<BladeMask>(sig.blade_count() - 1));
}

Multivector Multivector::from_terms(const Signature& sig, std::vector<Term> terms) {
  MultivectorBuilder builder(sig);
  for (auto& [m, c] : terms) builder.add(m, c);
  return builder.build();
}

Multivector MultivectorBuilder::build() {
  std::sort(raw_.begin(), raw_.end(),
            [](const auto& a, const auto& b) { return blade_less(a.first, b.first); });
  Multivector out(sig_);
  for (auto& [m, c] : raw_) {
    if (m >= sig_.blade_count()) throw std::out_of_range("blade mask outside algebra");
    if (!out.terms_.empty() && out.terms_.back().first == m) {
      out.terms_.back().second += c;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (c != 0) {
      out.terms_.emplace_back(m, std::move(c));
    }
  }
  return out;
}

Rational Multivector::coeff(BladeMask m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, BladeMask key) { return blade_less(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

bool Multivector::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool Multivector::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return grade(t.first) % 2 == 0; });
}

bool Multivector::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return grade(t.first) % 2 == 1; });
}

Multivector Multivector::grade_projection(int k) const {
  if (k < 0 || k > sig_.n()) throw std::out_of_range("grade outside 0..n");
  Multivector out(sig_);
  for (const auto& [m, c] : terms_)
    if (grade(m) == k) out.terms_.emplace_back(m, c);
  return out;
}

int Multivector::max_grade() const {
  int g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, grade(m));
  return g;
}

Multivector Multivector::grade_involution() const {
  Multivector out(sig_);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_)
    out.terms_.emplace_back(m, (grade(m) % 2 == 0) ? c : -c);
  return out;
}

Multivector Multivector::reversion() const {
  Multivector out(sig_);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const int k = grade(m);
    out.terms_.emplace_back(m, (k * (k - 1) / 2) % 2 == 0 ? c : -c);
  }
  return out;
}

Multivector Multivector::clifford_conjugation() const {
  Multivector out(sig_);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const int k = grade(m);
    out.terms_.emplace_back(m, (k * (k + 1) / 2) % 2 == 0 ? c : -c);
  }
  return out;
}

Multivector Multivector::norm() const { return *this * clifford_conjugation(); }

Multivector Multivector::operator-() const {
  Multivector out(sig_);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
  return out;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  Multivector out(a.sig_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && blade_less(ia->first, ib->first))) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || blade_less(ib->first, ia->first)) {
      out.terms_.push_back(*ib++);
    } else {
      Rational c = ia->second + ib->second;
      if (c != 0) out.terms_.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

Multivector operator*(const Rational& c, const Multivector& a) {
  Multivector out(a.sig_);
  if (c == 0) return out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& [m, v] : a.terms_) out.terms_.emplace_back(m, c * v);
  return out;
}

Multivector operator*(const Multivector& a, const Rational& c) { return c * a; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const std::size_t pairs = a.term_count() * b.term_count();
  if (pairs >= kernels::kParallelPairThreshold) return kernels::product_parallel(a, b);
  return kernels::product_serial(a, b);
}

Multivector wedge_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  MultivectorBuilder builder(a.algebra());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;  // repeated factor
      const auto [mask, sign] = blade_product(ma, mb, a.algebra());
      Rational term(ca * cb);
      if (sign < 0) term = -term;
      builder.add(mask, term);
    }
  }
  return builder.build();
}

bool center_test(const Multivector& x) {
  const Signature& sig = x.algebra();
  for (int i = 0; i < sig.n(); ++i) {
    const Multivector e = Multivector::basis_vector(sig, i);
    if (x * e != e * x) return false;
  }
  return true;
}

std::vector<Rational> coordinates(const Multivector& x) {
  std::vector<Rational> out(x.algebra().blade_count(), Rational(0));
  for (const auto& [m, c] : x.terms()) out[canonical_index(m, x.algebra().n())] = c;
  return out;
}

Multivector from_coordinates(const Signature& sig, const std::vector<Rational>& coords) {
  const auto blades = canonical_blades(sig.n());
  MultivectorBuilder builder(sig);
  for (std::size_t k = 0; k < blades.size(); ++k)
    if (coords[k] != 0) builder.add(blades[k], coords[k]);
  return builder.build();
}

std::optional<Multivector> Multivector::try_inverse() const {
  if (terms_.empty()) return std::nullopt;

  // Fast path: N(x) a nonzero central scalar gives conj(x) / N(x).
  const Multivector conj = clifford_conjugation();
  const Multivector n = *this * conj;
  if (n.is_scalar() && !n.is_zero()) return conj * (Rational(1) / n.scalar_part());

  // General path: solve L_x b = 1 in the left-regular representation.
  const int dim = sig_.n();
  const std::size_t size = sig_.blade_count();
  const auto blades = canonical_blades(dim);
  RatMatrix reg(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    const Multivector col = *this * Multivector::basis_blade(sig_, blades[j]);
    for (const auto& [m, c] : col.terms()) reg.at(canonical_index(m, dim), j) = c;
  }
  std::vector<Rational> unit(size, Rational(0));
  unit[0] = 1;
  auto sol = reg.solve(unit);
  if (!sol) return std::nullopt;
  return from_coordinates(sig_, *sol);
}

Multivector Multivector::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw SingularElement("element has no inverse");
  return *inv;
}

std::string Multivector::to_expression_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    std::string blades;
    for (int i = 0; i < sig_.n(); ++i) {
      if (m >> i & 1) {
        if (!blades.empty()) blades += "*";
        blades += "e" + std::to_string(i);
      }
    }
    if (blades.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += blades;
    } else {
      out += rat_to_string(mag) + "*" + blades;
    }
  }
  return out;
}

}  // namespace cliff
