#pragma once

// Dense matrices of exact rationals with Gaussian solve/inverse. Pivoting is
// "first nonzero in column": stability is a non-issue in exact arithmetic.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coalesce/rational.hpp"

namespace coalesce {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularError : std::domain_error {
  using std::domain_error::domain_error;
};

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix: empty dimension");
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix ones(std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (auto& e : m.entries_) e = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Rational row_sum(std::size_t r) const {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c);
    return s;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    requireSameShape(a, b, "matrix add");
    RationalMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
  }

  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    requireSameShape(a, b, "matrix subtract");
    RationalMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
    RationalMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix r = a;
    for (auto& e : r.entries_) e *= s;
    return r;
  }

 private:
  static void requireSameShape(const RationalMatrix& a, const RationalMatrix& b,
                               const char* what) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ShapeError(std::string(what) + ": shapes differ");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

// Solves a x = b exactly for square nonsingular a; b may have any column count.
inline RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != a.cols()) throw ShapeError("solve: matrix not square");
  if (b.rows() != a.rows()) throw ShapeError("solve: right-hand side row count differs");
  const std::size_t n = a.rows();
  RationalMatrix work = a;
  RationalMatrix rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularError("solve: singular matrix");
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(work(col, c), work(pivot, c));
      for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(col, c), rhs(pivot, c));
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col) == 0) continue;
      Rational factor = work(r, col) / work(col, col);
      work(r, col) = 0;
      for (std::size_t c = col + 1; c < n; ++c) work(r, c) -= factor * work(col, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= factor * rhs(col, c);
    }
  }
  RationalMatrix x(n, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t ri = n; ri-- > 0;) {
      Rational acc = rhs(ri, c);
      for (std::size_t k = ri + 1; k < n; ++k) acc -= work(ri, k) * x(k, c);
      x(ri, c) = acc / work(ri, ri);
    }
  }
  return x;
}

inline RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse: matrix not square");
  return solve(a, RationalMatrix::identity(a.rows()));
}

// Row-vector and column-vector products, used for landing recursions and
// expected-time formulas.
inline std::vector<Rational> row_product(const std::vector<Rational>& v,
                                         const RationalMatrix& m) {
  if (v.size() != m.rows()) throw ShapeError("row product: length mismatch");
  std::vector<Rational> out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

inline std::vector<Rational> col_product(const RationalMatrix& m,
                                         const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw ShapeError("column product: length mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline Rational vec_sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& e : v) s += e;
  return s;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace coalesce
