#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgsearch/poly.hpp"
#include "hgsearch/rational.hpp"

namespace hgsearch {

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T{}) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw std::invalid_argument("DenseMatrix: entry count mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return e_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> e_;
};

using QMatrix = DenseMatrix<Rational>;
using PolyMatrix = DenseMatrix<Poly>;

/// Reduced row-echelon form in place; returns the pivot columns, ascending.
template <class T>
std::vector<std::size_t> rref(DenseMatrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && hgsearch::is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || hgsearch::is_zero(m(r, col))) continue;
      T f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right nullspace. One vector per free column (ascending), with
/// that free variable set to 1 and the other free variables 0. Empty when
/// only the trivial solution exists.
template <class T>
std::vector<std::vector<T>> nullspace(DenseMatrix<T> m) {
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination; `m` is consumed.
Integer bareiss_determinant(std::vector<Integer> m, std::size_t n);

/// Exact determinant of a square rational matrix. Rows are scaled to integers
/// and reduced with Bareiss elimination.
Rational determinant(const QMatrix& m);

/// Interpolation nodes 0, 1, -1, 2, -2, ...
std::vector<long> evaluation_points(std::size_t count);

/// Newton interpolation through (points[i], values[i]).
Poly interpolate(std::span<const long> points, std::span<const Rational> values);

}  // namespace hgsearch
