#include "cliff/embeddings.hpp"

#include <algorithm>

#include "cliff/errors.hpp"
#include "cliff/ratmat.hpp"

namespace cliff::embed {

namespace {

const Signature& sig23() {
  static const Signature sig = Signature::cl23();
  return sig;
}

const Signature& sig13() {
  static const Signature sig = Signature::cl13();
  return sig;
}

}  // namespace

ComplexMultivector13 ComplexMultivector13::scalar(ComplexRational c) {
  ComplexMultivector13 m;
  if (!c.is_zero()) m.terms_.emplace_back(0, std::move(c));
  return m;
}

ComplexMultivector13 ComplexMultivector13::basis_blade(BladeMask mask, ComplexRational c) {
  if (mask >= 16) throw std::out_of_range("gamma-blade mask outside the algebra");
  ComplexMultivector13 m;
  if (!c.is_zero()) m.terms_.emplace_back(mask, std::move(c));
  return m;
}

ComplexMultivector13 ComplexMultivector13::gamma(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("gamma index");
  return basis_blade(BladeMask{1} << mu);
}

ComplexMultivector13 ComplexMultivector13::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return blade_less(a.first, b.first); });
  ComplexMultivector13 out;
  for (auto& [m, c] : terms) {
    if (m >= 16) throw std::out_of_range("gamma-blade mask outside the algebra");
    if (!out.terms_.empty() && out.terms_.back().first == m) {
      out.terms_.back().second = out.terms_.back().second + c;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else if (!c.is_zero()) {
      out.terms_.emplace_back(m, std::move(c));
    }
  }
  return out;
}

ComplexRational ComplexMultivector13::coeff(BladeMask m) const {
  for (const auto& [mask, c] : terms_)
    if (mask == m) return c;
  return {};
}

ComplexMultivector13 ComplexMultivector13::operator-() const {
  ComplexMultivector13 out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
  return out;
}

ComplexMultivector13 operator+(const ComplexMultivector13& a, const ComplexMultivector13& b) {
  std::vector<ComplexMultivector13::Term> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return ComplexMultivector13::from_terms(std::move(terms));
}

ComplexMultivector13 operator-(const ComplexMultivector13& a, const ComplexMultivector13& b) {
  return a + (-b);
}

ComplexMultivector13 operator*(const ComplexMultivector13& a, const ComplexMultivector13& b) {
  std::vector<ComplexMultivector13::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const auto [mask, sign] = blade_product(ma, mb, sig13());
      ComplexRational c = ca * cb;
      terms.emplace_back(mask, sign > 0 ? c : -c);
    }
  }
  return ComplexMultivector13::from_terms(std::move(terms));
}

ComplexMultivector13 operator*(const ComplexRational& c, const ComplexMultivector13& a) {
  return ComplexMultivector13::scalar(c) * a;
}

std::string ComplexMultivector13::to_expression_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto append_part = [&out](const Rational& coeff, bool imaginary, const std::string& blades) {
    if (coeff == 0) return;
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    std::string factors;
    if (imaginary) factors = "I";
    if (!blades.empty()) factors += (factors.empty() ? "" : "*") + blades;
    if (factors.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += rat_to_string(mag) + "*" + factors;
    }
  };
  for (const auto& [m, c] : terms_) {
    std::string blades;
    for (int mu = 0; mu < 4; ++mu) {
      if (m >> mu & 1) {
        if (!blades.empty()) blades += "*";
        blades += "gamma" + std::to_string(mu);
      }
    }
    append_part(c.re, false, blades);
    append_part(c.im, true, blades);
  }
  return out;
}

Multivector twisted_vector(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("gamma index");
  const Multivector i = Multivector::pseudoscalar(sig23());
  const Multivector e4 = Multivector::basis_vector(sig23(), 4);
  const Multivector e_mu = Multivector::basis_vector(sig23(), mu);
  return -(i * e4 * e_mu);
}

Multivector embed_blade(BladeMask mask13, EmbeddingKind kind) {
  if (kind == EmbeddingKind::Trivial)
    return Multivector::basis_blade(sig23(), mask13);
  Multivector acc = Multivector::scalar(sig23(), 1);
  for (int mu = 0; mu < 4; ++mu)
    if (mask13 >> mu & 1) acc = acc * twisted_vector(mu);
  return acc;
}

Multivector embed(const ComplexMultivector13& x, EmbeddingKind kind) {
  const Multivector i = Multivector::pseudoscalar(sig23());
  Multivector acc = Multivector::zero(sig23());
  for (const auto& [m, c] : x.terms()) {
    const Multivector image = embed_blade(m, kind);
    acc = acc + (image * c.re + (i * image) * c.im);
  }
  return acc;
}

namespace {

// Real basis of the complex algebra: (blade, 1) and (blade, I) pairs in
// canonical blade order. The embedding is a linear bijection onto the
// 32-dimensional real algebra; extract applies the cached inverse matrix.
struct ExtractTable {
  std::vector<BladeMask> blades;
  RatMatrix inverse;
};

const ExtractTable& extract_table(EmbeddingKind kind) {
  static auto build = [](EmbeddingKind k) {
    ExtractTable table;
    table.blades = canonical_blades(4);
    const Multivector i = Multivector::pseudoscalar(sig23());
    RatMatrix m(32, 32);
    for (std::size_t col = 0; col < 16; ++col) {
      const Multivector real_image = embed_blade(table.blades[col], k);
      const Multivector imag_image = i * real_image;
      const auto real_coords = coordinates(real_image);
      const auto imag_coords = coordinates(imag_image);
      for (std::size_t row = 0; row < 32; ++row) {
        m.at(row, 2 * col) = real_coords[row];
        m.at(row, 2 * col + 1) = imag_coords[row];
      }
    }
    auto inv = m.inverse();
    if (!inv) throw Error("embedding matrix is singular");
    table.inverse = std::move(*inv);
    return table;
  };
  static const ExtractTable trivial_table = build(EmbeddingKind::Trivial);
  static const ExtractTable twisted_table = build(EmbeddingKind::Twisted);
  return kind == EmbeddingKind::Trivial ? trivial_table : twisted_table;
}

}  // namespace

ComplexMultivector13 extract(const Multivector& y, EmbeddingKind kind) {
  if (y.algebra() != sig23()) throw SignatureMismatch("extract expects a Cl(2,3) element");
  const ExtractTable& table = extract_table(kind);
  const auto coords = coordinates(y);
  std::vector<ComplexMultivector13::Term> terms;
  for (std::size_t k = 0; k < 16; ++k) {
    Rational re(0), im(0);
    for (std::size_t j = 0; j < 32; ++j) {
      if (coords[j] == 0) continue;
      re += table.inverse.at(2 * k, j) * coords[j];
      im += table.inverse.at(2 * k + 1, j) * coords[j];
    }
    if (re != 0 || im != 0) terms.emplace_back(table.blades[k], ComplexRational{re, im});
  }
  return ComplexMultivector13::from_terms(std::move(terms));
}

Multivector trivial_embed_real(const Multivector& x13) {
  if (x13.algebra() != sig13())
    throw SignatureMismatch("expected a Cl(1,3) element");
  std::vector<Multivector::Term> terms(x13.terms().begin(), x13.terms().end());
  return Multivector::from_terms(sig23(), std::move(terms));
}

namespace {

void require_pin13(const Multivector& x13) {
  if (x13.algebra() != sig13()) throw NotInPin13("expected a Cl(1,3) element");
  const auto cert = groups::classify(x13);
  if (!cert.in_pin) throw NotInPin13("element does not certify in Pin(1,3)");
  if (!x13.is_even() && !x13.is_odd())
    throw NotInPin13("element has mixed parity");
}

}  // namespace

Multivector theta(const Multivector& x13) {
  require_pin13(x13);
  const Multivector lifted = trivial_embed_real(x13);
  if (x13.is_even()) return lifted;
  return Multivector::pseudoscalar(sig23()) * lifted;
}

groups::OrthoMatrix ell(const RatMatrix& l) {
  return ell(groups::OrthoMatrix::checked(l, sig13()));
}

groups::OrthoMatrix ell(const groups::OrthoMatrix& l) {
  if (l.metric() != sig13()) throw NotOrthogonal("expected a matrix over the (1,3) metric");
  RatMatrix block(5, 5);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) block.at(r, c) = l.matrix().at(r, c);
  block.at(4, 4) = l.det();
  return groups::OrthoMatrix::checked(std::move(block), sig23());
}

bool diagram_check(const Multivector& x13) {
  require_pin13(x13);
  const groups::OrthoMatrix down = ell(groups::adjoint_matrix(x13));
  const groups::OrthoMatrix up = groups::adjoint_matrix(theta(x13));
  return down == up;
}

bool twisted_action_check(const Multivector& x13, const Multivector& v13) {
  require_pin13(x13);
  if (v13.algebra() != sig13() || v13 != v13.grade_projection(1))
    throw Error("expected a grade-1 element of the trivial copy");

  // tilde of a spacetime vector: v^mu etilde_mu
  auto tilde = [](const Multivector& v) {
    Multivector acc = Multivector::zero(sig23());
    for (int mu = 0; mu < 4; ++mu)
      acc = acc + v.coeff(BladeMask{1} << mu) * twisted_vector(mu);
    return acc;
  };

  const Multivector x5 = trivial_embed_real(x13);
  const Multivector lhs = x5 * tilde(v13) * x5.inverse();
  const Multivector transformed = x13 * v13 * x13.inverse();
  const Multivector rhs = tilde(transformed);
  return x13.is_even() ? lhs == rhs : lhs == -rhs;
}

CanonicalElements canonical_elements() {
  CanonicalElements out{
      Multivector::basis_vector(sig13(), 0),
      Multivector::basis_blade(sig13(), 0b1110),
      Multivector::basis_blade(sig23(), 0b11110),
      -Multivector::basis_blade(sig23(), 0b10001),
  };
  if (theta(out.P) != out.parity5 || theta(out.T) != out.time_reversal5)
    throw Error("canonical parity/time-reversal images are inconsistent");
  return out;
}

}  // namespace cliff::embed
