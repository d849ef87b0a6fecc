#ifndef LGQ_MATRIX_HPP
#define LGQ_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "lgq/rational.hpp"

namespace lgq {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& at(size_t i, size_t j) { return cells_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return cells_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k)
        for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    return r;
  }

  void swap_rows(size_t a, size_t b) {
    for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

 private:
  size_t rows_, cols_;
  std::vector<T> cells_;
};

// Fraction-free (Bareiss) elimination over Z[x...]; all divisions are exact
// by the Sylvester identity, a failed division means an arithmetic bug.
inline Polynomial bareiss_determinant(Matrix<Polynomial> m) {
  assert(m.rows() == m.cols() && m.rows() >= 1);
  const size_t n = m.rows();
  int sign = 1;
  Polynomial prev = Polynomial::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Polynomial::zero();
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        Polynomial q;
        if (!num.try_divide_exact(prev, &q))
          throw Error("Bareiss elimination: exact division failed (arithmetic bug)");
        m.at(i, j) = std::move(q);
      }
      m.at(i, k) = Polynomial::zero();
    }
    prev = m.at(k, k);
  }
  Polynomial det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

// Determinant of a matrix of rational functions: clear all entries against
// the least common denominator multiset D, run Bareiss over Z[x...], and
// return det(cleared)/D^n.
inline RationalFunction determinant(const Matrix<RationalFunction>& m) {
  assert(m.rows() == m.cols() && m.rows() >= 1);
  const size_t n = m.rows();
  std::vector<CycleFactor> common;  // per-factor max multiplicity across entries
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const auto& den = m.at(i, j).denominator();
      std::vector<CycleFactor> merged;
      size_t a = 0, b = 0;
      while (a < common.size() || b < den.size()) {
        if (b == den.size() || (a < common.size() && common[a] < den[b]))
          merged.push_back(common[a++]);
        else if (a == common.size() || den[b] < common[a])
          merged.push_back(den[b++]);
        else {
          merged.push_back(common[a]);
          ++a, ++b;
        }
      }
      common = std::move(merged);
    }

  Matrix<Polynomial> cleared(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // multiply numerator by common \ den(i,j)
      const auto& den = m.at(i, j).denominator();
      Polynomial p = m.at(i, j).numerator();
      size_t b = 0;
      for (size_t a = 0; a < common.size(); ++a) {
        if (b < den.size() && !(common[a] < den[b]) && !(den[b] < common[a]))
          ++b;
        else
          p *= common[a].to_poly();
      }
      cleared.at(i, j) = std::move(p);
    }

  Polynomial det = bareiss_determinant(std::move(cleared));
  std::vector<CycleFactor> full_den;
  full_den.reserve(common.size() * n);
  for (size_t k = 0; k < n; ++k) full_den.insert(full_den.end(), common.begin(), common.end());
  return RationalFunction(std::move(det), std::move(full_den));
}

// Diagonal of the Smith normal form of an integer matrix (nonnegative,
// each entry dividing the next).
inline std::vector<Int> smith_normal_form(Matrix<Int> m) {
  const size_t rows = m.rows(), cols = m.cols();
  const size_t n = std::min(rows, cols);
  std::vector<Int> diag;
  for (size_t t = 0; t < n; ++t) {
    // find a nonzero pivot in the submatrix [t.., t..]
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    m.swap_rows(t, pi);
    for (size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        for (size_t j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {  // remainder smaller than pivot: swap up
          m.swap_rows(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        for (size_t i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry; if not, fold the offender in
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols && clean; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (size_t jj = t; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
            clean = false;
          }
    }
    diag.push_back(m.at(t, t) < 0 ? Int(-m.at(t, t)) : m.at(t, t));
  }
  while (diag.size() < n) diag.push_back(0);
  return diag;
}

}  // namespace lgq

#endif
