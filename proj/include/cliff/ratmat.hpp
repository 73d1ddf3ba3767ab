#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cliff/rational.hpp"

namespace cliff {

enum class Engine { Serial, Parallel, Auto };

// Dense matrix of exact rationals. Elimination comes in two flavours: a
// serial reference and an OpenMP kernel that splits each pivot step across
// column slices. Auto picks the serial engine (exact elimination is
// bandwidth-bound; see the note in ratmat.cpp); both engines produce the
// same reduced form entry for entry and the tests compare them.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  // In-place Gauss-Jordan to reduced row echelon form; returns the rank.
  std::size_t rref(Engine engine = Engine::Auto);

  std::size_t rank(Engine engine = Engine::Auto) const;
  Rational det() const;  // square only

  // Unique solution of A x = b, or nullopt when A is singular (square A).
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b,
                                             Engine engine = Engine::Auto) const;
  std::optional<RatMatrix> inverse(Engine engine = Engine::Auto) const;

 private:
  std::size_t rref_serial();
  std::size_t rref_parallel();

  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Grow-only row space used for exact rank bookkeeping: add() reduces the
// vector against the rows collected so far and keeps it when independent.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

  // True when the vector enlarged the span.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;  // normalized, pivot of row k at piv_[k]
  std::vector<std::size_t> piv_;
};

}  // namespace cliff
