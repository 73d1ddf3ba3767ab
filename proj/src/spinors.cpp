#include "cliff/spinors.hpp"

#include "cliff/embeddings.hpp"
#include "cliff/errors.hpp"

namespace cliff::spinors {

namespace {

int center_dimension(const Signature& sig) { return sig.n() % 2 == 0 ? 1 : 2; }

Multivector apply(const Multivector& x, Antimorphism anti) {
  return anti == Antimorphism::Conjugation ? x.clifford_conjugation() : x.reversion();
}

// span of {f b f : b blade}; its dimension decides primitivity.
std::size_t sandwich_dimension(const Multivector& f) {
  const Signature& sig = f.algebra();
  IncrementalSpan span(sig.blade_count());
  for (BladeMask m : canonical_blades(sig.n())) {
    const Multivector x = f * Multivector::basis_blade(sig, m) * f;
    if (!x.is_zero()) span.add(coordinates(x));
  }
  return span.rank();
}

}  // namespace

KScalar KScalar::inverse() const {
  const Rational n = a * a + b * b;
  if (n == 0) throw SingularElement("zero spinor scalar has no inverse");
  return {a / n, -b / n};
}

KMatrix KMatrix::identity(std::size_t k) {
  KMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = KScalar::one();
  return m;
}

KMatrix KMatrix::conj_transpose() const {
  KMatrix out(k_);
  for (std::size_t r = 0; r < k_; ++r)
    for (std::size_t c = 0; c < k_; ++c) out.at(r, c) = at(c, r).conj();
  return out;
}

KMatrix operator*(const KMatrix& x, const KMatrix& y) {
  if (x.k_ != y.k_) throw std::invalid_argument("K-matrix size mismatch");
  KMatrix out(x.k_);
  for (std::size_t r = 0; r < x.k_; ++r)
    for (std::size_t c = 0; c < x.k_; ++c) {
      KScalar acc;
      for (std::size_t m = 0; m < x.k_; ++m) acc = acc + x.at(r, m) * y.at(m, c);
      out.at(r, c) = acc;
    }
  return out;
}

KMatrix operator+(const KMatrix& x, const KMatrix& y) {
  if (x.k_ != y.k_) throw std::invalid_argument("K-matrix size mismatch");
  KMatrix out(x.k_);
  for (std::size_t j = 0; j < x.a_.size(); ++j) out.a_[j] = x.a_[j] + y.a_[j];
  return out;
}

std::optional<KMatrix> KMatrix::inverse() const {
  // Gauss-Jordan over the complex rational field.
  KMatrix aug(k_);
  KMatrix inv = identity(k_);
  aug = *this;
  for (std::size_t col = 0; col < k_; ++col) {
    std::size_t sel = col;
    while (sel < k_ && aug.at(sel, col).is_zero()) ++sel;
    if (sel == k_) return std::nullopt;
    if (sel != col)
      for (std::size_t c = 0; c < k_; ++c) {
        std::swap(aug.at(col, c), aug.at(sel, c));
        std::swap(inv.at(col, c), inv.at(sel, c));
      }
    const KScalar pivot_inv = aug.at(col, col).inverse();
    for (std::size_t c = 0; c < k_; ++c) {
      aug.at(col, c) = aug.at(col, c) * pivot_inv;
      inv.at(col, c) = inv.at(col, c) * pivot_inv;
    }
    for (std::size_t r = 0; r < k_; ++r) {
      if (r == col || aug.at(r, col).is_zero()) continue;
      const KScalar factor = aug.at(r, col);
      for (std::size_t c = 0; c < k_; ++c) {
        aug.at(r, c) = aug.at(r, c) - factor * aug.at(col, c);
        inv.at(r, c) = inv.at(r, c) - factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

bool is_idempotent(const Multivector& x) { return x * x == x; }

bool is_primitive(const Multivector& x) {
  if (!is_idempotent(x) || x.is_zero()) return false;
  return sandwich_dimension(x) == static_cast<std::size_t>(center_dimension(x.algebra()));
}

Idempotent Idempotent::certify(const Multivector& x) {
  if (!is_idempotent(x)) throw NotPrimitive("element is not idempotent");
  return Idempotent{x, is_primitive(x)};
}

Multivector dirac_idempotent() {
  const Signature sig = Signature::cl23();
  const Multivector one = Multivector::scalar(sig, 1);
  const Multivector i = Multivector::pseudoscalar(sig);
  const Rational half(1, 2);
  const Multivector first = half * (one + embed::twisted_vector(0));
  const Multivector second =
      half * (one + i * embed::twisted_vector(1) * embed::twisted_vector(2));
  return first * second;
}

int radon_hurwitz(int j) {
  static constexpr int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  int shift = 0;
  while (j < 0) {
    j += 8;
    shift -= 4;
  }
  return base[j % 8] + 4 * (j / 8) + shift;
}

int idempotent_exponent(const Signature& sig) {
  return sig.q() - radon_hurwitz(sig.q() - sig.p());
}

Multivector find_s(const Multivector& f, Antimorphism anti) {
  const Signature& sig = f.algebra();
  const Multivector image = apply(f, anti);
  for (BladeMask m : canonical_blades(sig.n())) {
    const Multivector b = Multivector::basis_blade(sig, m);
    if (b * image == f * b) return b;
  }
  throw NoSuchBlade("no standard-basis blade conjugates the idempotent image back");
}

SpinorSpace::SpinorSpace(const Idempotent& f) : sig_(f.value.algebra()), f_(f.value) {
  if (!is_idempotent(f_) || !f.primitive || !is_primitive(f_))
    throw NotPrimitive("spinor space requires a primitive idempotent");
  const Multivector i = Multivector::pseudoscalar(sig_);
  if (sig_.n() % 2 == 0 || i * i != Multivector::scalar(sig_, -1))
    throw NotPrimitive("spinor scalars require an odd dimension with i^2 = -1");

  // Real basis: blade*f products that grow the span, graded-lex order.
  IncrementalSpan real_span(sig_.blade_count());
  for (BladeMask m : canonical_blades(sig_.n())) {
    Multivector candidate = Multivector::basis_blade(sig_, m) * f_;
    if (candidate.is_zero()) continue;
    if (real_span.add(coordinates(candidate))) real_basis_.push_back(std::move(candidate));
  }

  // Greedy right-K-independence scan; the K-span of the chosen spinors is
  // the real span of the pairs {u, u*i} since the scalars are central.
  IncrementalSpan k_span(sig_.blade_count());
  for (const Multivector& u : real_basis_) {
    if (!k_span.add(coordinates(u))) continue;
    if (!k_span.add(coordinates(u * i)))
      throw Error("spinor scalar action degenerated on a basis candidate");
    k_basis_.push_back(u);
  }

  // The Dirac ordering of the canonical basis swaps the middle elements.
  if (f_ == dirac_idempotent() && k_basis_.size() == 4) {
    std::swap(k_basis_[1], k_basis_[2]);
  }

  build_k_extraction();

  s_conjugation_ = find_s(f_, Antimorphism::Conjugation);
  s_reversion_ = find_s(f_, Antimorphism::Reversion);

  // Dual basis u~^j = h^{ji} conj(u_i) from the conjugation Gram matrix.
  const std::size_t k = k_basis_.size();
  KMatrix gram(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      gram.at(r, c) = inner_product(*this, k_basis_[r], k_basis_[c], Antimorphism::Conjugation);
  const auto gram_inv = gram.inverse();
  if (!gram_inv) throw SingularGram("conjugation Gram matrix is singular");
  for (std::size_t j = 0; j < k; ++j) {
    Multivector acc = Multivector::zero(sig_);
    for (std::size_t l = 0; l < k; ++l)
      acc = acc + central_from_k(gram_inv->at(j, l)) * k_basis_[l].clifford_conjugation();
    dual_basis_.push_back(std::move(acc));
  }
}

void SpinorSpace::build_k_extraction() {
  // Fix two canonical coordinates where (f, i f) has an invertible 2x2
  // block; to_k_scalar solves against it and verifies the full expansion.
  const Multivector fi = Multivector::pseudoscalar(sig_) * f_;
  const auto cf = coordinates(f_);
  const auto cfi = coordinates(fi);
  for (std::size_t r1 = 0; r1 < cf.size(); ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < cf.size(); ++r2) {
      const Rational det = cf[r1] * cfi[r2] - cf[r2] * cfi[r1];
      if (det != 0) {
        probe1_ = r1;
        probe2_ = r2;
        f1_ = cf[r1];
        f2_ = cf[r2];
        g1_ = cfi[r1];
        g2_ = cfi[r2];
        probe_det_ = det;
        return;
      }
    }
  }
  throw SingularGram("f and i*f are linearly dependent");
}

bool SpinorSpace::in_ideal(const Multivector& psi) const {
  return psi.algebra() == sig_ && psi * f_ == psi;
}

KScalar SpinorSpace::to_k_scalar(const Multivector& x) const {
  if (x.algebra() != sig_) throw NotInIdeal("element from a different algebra");
  const auto cx = coordinates(x);
  const Rational a = (cx[probe1_] * g2_ - cx[probe2_] * g1_) / probe_det_;
  const Rational b = (f1_ * cx[probe2_] - f2_ * cx[probe1_]) / probe_det_;
  if (from_k_scalar(KScalar{a, b}) != x)
    throw NotInIdeal("element does not lie in f Cl f");
  return {a, b};
}

Multivector SpinorSpace::from_k_scalar(const KScalar& lambda) const {
  return central_from_k(lambda) * f_;
}

Multivector SpinorSpace::central_from_k(const KScalar& lambda) const {
  return Multivector::scalar(sig_, lambda.a) +
         lambda.b * Multivector::pseudoscalar(sig_);
}

const Multivector& SpinorSpace::s_element(Antimorphism anti) const {
  return anti == Antimorphism::Conjugation ? s_conjugation_ : s_reversion_;
}

KScalar inner_product(const SpinorSpace& space, const Multivector& psi, const Multivector& phi,
                      Antimorphism anti) {
  if (!space.in_ideal(psi) || !space.in_ideal(phi))
    throw NotInIdeal("inner product arguments must lie in the minimal left ideal");
  const Multivector product = space.s_element(anti) * apply(psi, anti) * phi;
  return space.to_k_scalar(product);
}

KMatrix gram_matrix(const SpinorSpace& space, Antimorphism anti) {
  const std::size_t k = space.k();
  KMatrix h(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      h.at(r, c) = inner_product(space, space.k_basis()[r], space.k_basis()[c], anti);
  return h;
}

KScalar scalar_conjugation(const SpinorSpace& space, const KScalar& lambda, Antimorphism anti) {
  const Multivector& s = space.s_element(anti);
  const Multivector image = s * apply(space.from_k_scalar(lambda), anti) * s.inverse();
  return space.to_k_scalar(image);
}

KMatrix matrix_rep(const SpinorSpace& space, const Multivector& a) {
  const std::size_t k = space.k();
  KMatrix rep(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      rep.at(r, c) = space.to_k_scalar(space.dual_basis()[r] * a * space.k_basis()[c]);
  return rep;
}

bool matrix_adjoint_check(const SpinorSpace& space, const Multivector& a) {
  const Multivector gamma0 = embed::twisted_vector(0);
  const KMatrix lhs = matrix_rep(space, gamma0 * a.clifford_conjugation() * gamma0);
  const KMatrix rhs = matrix_rep(space, a).conj_transpose();
  return lhs == rhs;
}

Multivector reconstruct(const SpinorSpace& space, const KMatrix& components) {
  const std::size_t k = space.k();
  if (components.size() != k) throw std::invalid_argument("component matrix size mismatch");
  Multivector acc = Multivector::zero(space.algebra());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      acc = acc + space.central_from_k(components.at(r, c)) * space.k_basis()[r] *
                      space.dual_basis()[c];
  return acc;
}

CompleteIdempotentSet complete_idempotent_set(const SpinorSpace& space) {
  if (space.dual_basis().empty())
    throw DualBasisUnavailable("spinor space has no dual basis");
  const std::size_t k = space.k();
  CompleteIdempotentSet out;
  out.units.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    out.units[r].reserve(k);
    for (std::size_t c = 0; c < k; ++c)
      out.units[r].push_back(space.k_basis()[r] * space.dual_basis()[c]);
    out.f.push_back(out.units[r][r]);
  }
  return out;
}

bool peirce_check(const SpinorSpace& space) {
  const Signature& sig = space.algebra();
  const auto set = complete_idempotent_set(space);
  const std::size_t k = set.f.size();
  const std::size_t expected_cell = static_cast<std::size_t>(center_dimension(sig));

  // completeness and orthogonality of the idempotent family
  Multivector sum = Multivector::zero(sig);
  for (const auto& fi : set.f) sum = sum + fi;
  if (sum != Multivector::scalar(sig, 1)) return false;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const Multivector product = set.f[a] * set.f[b];
      if (product != (a == b ? set.f[a] : Multivector::zero(sig))) return false;
    }

  // cell spans A_ij = f_i Cl f_j
  std::vector<std::vector<std::vector<Multivector>>> cell(k);
  std::vector<std::vector<IncrementalSpan>> cell_span;
  std::size_t total = 0;
  for (std::size_t a = 0; a < k; ++a) {
    cell[a].resize(k);
    cell_span.emplace_back();
    for (std::size_t b = 0; b < k; ++b) {
      cell_span[a].emplace_back(sig.blade_count());
      for (BladeMask m : canonical_blades(sig.n())) {
        const Multivector x = set.f[a] * Multivector::basis_blade(sig, m) * set.f[b];
        if (!x.is_zero() && cell_span[a][b].add(coordinates(x))) cell[a][b].push_back(x);
      }
      if (cell_span[a][b].rank() != expected_cell) return false;
      total += cell_span[a][b].rank();
    }
  }
  if (total != sig.blade_count()) return false;

  // delta rule on the spanning sets: A_ij A_lk = delta_jl A_ik
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d)
          for (const auto& x : cell[a][b])
            for (const auto& y : cell[c][d]) {
              const Multivector p = x * y;
              if (b != c) {
                if (!p.is_zero()) return false;
              } else if (!p.is_zero() && !cell_span[a][d].contains(coordinates(p))) {
                return false;
              }
            }

  // matrix-unit relations E_ij E_lk = delta_jl E_ik
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
          const Multivector p = set.units[a][b] * set.units[c][d];
          const Multivector expected =
              b == c ? set.units[a][d] : Multivector::zero(sig);
          if (p != expected) return false;
        }
  return true;
}

bool e4_reduction_check(const Multivector& f) {
  const Signature& sig = f.algebra();
  const Multivector e4 = Multivector::basis_vector(sig, 4);
  const Multivector e0 = Multivector::basis_vector(sig, 0);
  const Multivector i = Multivector::pseudoscalar(sig);
  return e4 * f == -(i * e0 * f);
}

bool in_aut(const Multivector& x) {
  if (!groups::in_clifford_group(x)) return false;
  return x.clifford_conjugation() * x == Multivector::scalar(x.algebra(), 1);
}

bool in_5d_aut(const Multivector& x) {
  if (!in_aut(x)) return false;
  const Signature& sig = x.algebra();
  const Multivector inv = x.inverse();
  for (int mu = 0; mu < 4; ++mu) {
    const Multivector image = x * Multivector::basis_vector(sig, mu) * inv;
    for (const auto& [m, c] : image.terms())
      if (grade(m) != 1 || (m & (BladeMask{1} << 4))) return false;
  }
  return true;
}

}  // namespace cliff::spinors
