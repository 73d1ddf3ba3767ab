#include "cliff/ratmat.hpp"

#include <omp.h>

#include <stdexcept>
#include <utility>

namespace cliff {

// Exact elimination is allocator- and bandwidth-bound: even two fully
// independent instances barely scale on narrow machines, so Auto keeps the
// serial engine. The parallel engine stays available for explicit use where
// threads have private memory bandwidth, and the tests hold both engines to
// entry-for-entry agreement.

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& v = a.at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (b.at(k, c) != 0) out.at(r, c) += v * b.at(k, c);
    }
  return out;
}

// Forward elimination then a separate back-substitution sweep. Kept as the
// reference the parallel engine is checked against.
std::size_t RatMatrix::rref_serial() {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t sel = rank;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != rank)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(rank, c), at(sel, c));
    const Rational inv_pivot = Rational(1) / at(rank, col);
    for (std::size_t c = col; c < cols_; ++c) at(rank, c) *= inv_pivot;
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (at(r, col) == 0) continue;
      const Rational factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(rank, c);
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    for (std::size_t r = 0; r < k; ++r) {
      if (at(r, col) == 0) continue;
      const Rational factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(k, c);
    }
  }
  return rank;
}

// Same forward/back elimination as the serial engine, with each pivot step
// parallelized across columns: one thread owns a column slice and performs
// the normalization plus every row update inside it. Late steps keep their
// parallelism as long as the matrix is wide (augmented solves), and writes
// stay disjoint between threads.
std::size_t RatMatrix::rref_parallel() {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<Rational> factors(rows_);
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t sel = rank;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != rank)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(rank, c), at(sel, c));
    const Rational inv_pivot = Rational(1) / at(rank, col);
    // elimination factors against the normalized pivot row (whose entry in
    // this column becomes 1), read before the column slice is rewritten
    for (std::size_t r = rank + 1; r < rows_; ++r) factors[r] = at(r, col);
    const long long first_col = static_cast<long long>(col);
    const long long ncols = static_cast<long long>(cols_);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long c = first_col; c < ncols; ++c) {
      at(rank, c) *= inv_pivot;
      const Rational& pivot_entry = at(rank, c);
      if (pivot_entry == 0) continue;
      for (std::size_t r = rank + 1; r < rows_; ++r)
        if (factors[r] != 0) at(r, c) -= factors[r] * pivot_entry;
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    for (std::size_t r = 0; r < k; ++r) factors[r] = at(r, col);
    const long long first_col = static_cast<long long>(col);
    const long long ncols = static_cast<long long>(cols_);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long c = first_col; c < ncols; ++c) {
      const Rational& pivot_entry = at(k, c);
      if (pivot_entry == 0) continue;
      for (std::size_t r = 0; r < k; ++r)
        if (factors[r] != 0) at(r, c) -= factors[r] * pivot_entry;
    }
  }
  return rank;
}

std::size_t RatMatrix::rref(Engine engine) {
  return engine == Engine::Parallel ? rref_parallel() : rref_serial();
}

std::size_t RatMatrix::rank(Engine engine) const {
  RatMatrix copy = *this;
  return copy.rref(engine);
}

Rational RatMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = *this;
  Rational det(1);
  for (std::size_t col = 0; col < m.cols_; ++col) {
    std::size_t sel = col;
    while (sel < m.rows_ && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows_) return Rational(0);
    if (sel != col) {
      for (std::size_t c = 0; c < m.cols_; ++c) std::swap(m.at(col, c), m.at(sel, c));
      det = -det;
    }
    const Rational pivot = m.at(col, col);
    det *= pivot;
    for (std::size_t r = col + 1; r < m.rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col) / pivot;
      for (std::size_t c = col; c < m.cols_; ++c) m.at(r, c) -= factor * m.at(col, c);
    }
  }
  return det;
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& b,
                                                      Engine engine) const {
  if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  const std::size_t rank = aug.rref(engine);
  // Square system: unique solution iff the coefficient block has full rank.
  for (std::size_t r = 0; r < rows_; ++r) {
    bool zero_row = true;
    for (std::size_t c = 0; c < cols_; ++c)
      if (aug.at(r, c) != 0) {
        zero_row = false;
        break;
      }
    if (zero_row && aug.at(r, cols_) != 0) return std::nullopt;
  }
  if (rank < cols_) return std::nullopt;
  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t piv = 0;
    while (piv < cols_ && aug.at(r, piv) == 0) ++piv;
    if (piv < cols_) x[piv] = aug.at(r, cols_);
  }
  return x;
}

std::optional<RatMatrix> RatMatrix::inverse(Engine engine) const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  RatMatrix aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  if (aug.rref(engine) < rows_) return std::nullopt;
  // full rank in the left block iff every pivot lands there
  for (std::size_t r = 0; r < rows_; ++r)
    if (aug.at(r, r) != 1) return std::nullopt;
  RatMatrix inv(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

bool IncrementalSpan::add(std::vector<Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("span dimension mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const Rational inv_pivot = Rational(1) / v[piv];
  for (auto& x : v) x *= inv_pivot;
  // keep existing rows reduced against the newcomer
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k][piv] == 0) continue;
    const Rational factor = rows_[k][piv];
    for (std::size_t c = 0; c < dim_; ++c) rows_[k][c] -= factor * v[c];
  }
  rows_.push_back(std::move(v));
  piv_.push_back(piv);
  return true;
}

bool IncrementalSpan::contains(std::vector<Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("span dimension mismatch");
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void IncrementalSpan::reduce(std::vector<Rational>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational factor = v[piv_[k]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) v[c] -= factor * rows_[k][c];
  }
}

}  // namespace cliff
