#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace cliff {

// 2^12 = 4096 blades is the largest table the dense kernels are sized for.
inline constexpr int kMaxDim = 12;

// Metric signature (p, q) together with the ordered diagonal of the bilinear
// form. The diagonal order matters: the five-dimensional algebra used by the
// embeddings fixes (+,-,-,-,+), which is not "p plus signs first".
class Signature {
 public:
  Signature() : n_(0), p_(0), q_(0), diag_{} {}

  static Signature from_diag(std::span<const int> diag) {
    if (diag.size() > static_cast<std::size_t>(kMaxDim))
      throw std::invalid_argument("signature dimension exceeds supported bound");
    Signature s;
    s.n_ = static_cast<int>(diag.size());
    for (int i = 0; i < s.n_; ++i) {
      if (diag[i] != 1 && diag[i] != -1)
        throw std::invalid_argument("signature diagonal entries must be +1 or -1");
      s.diag_[i] = static_cast<std::int8_t>(diag[i]);
      (diag[i] == 1 ? s.p_ : s.q_) += 1;
    }
    return s;
  }

  static Signature from_diag(std::initializer_list<int> diag) {
    return from_diag(std::span<const int>(diag.begin(), diag.size()));
  }

  // Generic (p,q): p entries of +1 followed by q entries of -1.
  static Signature from_pq(int p, int q) {
    if (p < 0 || q < 0 || p + q > kMaxDim)
      throw std::invalid_argument("bad signature (p,q)");
    Signature s;
    s.n_ = p + q;
    s.p_ = p;
    s.q_ = q;
    for (int i = 0; i < p; ++i) s.diag_[i] = 1;
    for (int i = p; i < p + q; ++i) s.diag_[i] = -1;
    return s;
  }

  // The five-dimensional algebra with two timelike directions e0 and e4.
  static Signature cl23() { return from_diag({1, -1, -1, -1, 1}); }

  // Minkowski spacetime (+,-,-,-).
  static Signature cl13() { return from_diag({1, -1, -1, -1}); }

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int metric(int index) const { return diag_[index]; }
  std::size_t blade_count() const { return std::size_t{1} << n_; }

  friend bool operator==(const Signature& a, const Signature& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.diag_[i] != b.diag_[i]) return false;
    return true;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

 private:
  int n_, p_, q_;
  std::array<std::int8_t, kMaxDim> diag_;
};

}  // namespace cliff
