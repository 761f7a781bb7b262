#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arbigeom/rational.hpp"

namespace arbigeom {

using RatVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals. Dimensions are fixed at
// construction; rows index scenarios and columns index investments in
// the payoff-matrix convention used throughout.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("RatMatrix: empty dimensions");
  }

  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("RatMatrix: empty dimensions");
    if (entries_.size() != rows * cols)
      throw std::invalid_argument("RatMatrix: entry count does not match dimensions");
  }

  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("RatMatrix: empty dimensions");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RatVector row(std::size_t i) const {
    return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  RatVector col(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

inline RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline RatVector multiply(const RatMatrix& m, const RatVector& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  RatVector y(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const RatVector& v) {
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form over the rationals. The result is the
/// canonical RREF (unique for a given matrix); row pivoting picks the
/// largest-height candidate entry to limit coefficient growth.
inline RrefResult rref(RatMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t sel = rows;
    Integer best_h;
    for (std::size_t i = lead; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      Integer h = height(m(i, col));
      if (sel == rows || h > best_h) {
        sel = i;
        best_h = std::move(h);
      }
    }
    if (sel == rows) continue;
    m.swap_rows(lead, sel);
    const Rational inv_pivot = Rational(1) / m(lead, col);
    for (std::size_t j = col; j < cols; ++j) m(lead, j) *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  const std::size_t rank = pivots.size();
  return RrefResult{std::move(m), std::move(pivots), rank};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Exact determinant by rational Gaussian elimination with
/// largest-height pivoting; throws on non-square input.
inline Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    Integer best_h;
    for (std::size_t i = col; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Integer h = height(m(i, col));
      if (sel == n || h > best_h) {
        sel = i;
        best_h = std::move(h);
      }
    }
    if (sel == n) return Rational(0);
    if (sel != col) {
      m.swap_rows(col, sel);
      det = -det;
    }
    const Rational pivot = m(col, col);
    det *= pivot;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / pivot;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

/// One exact solution of A x = b (free variables set to zero), or
/// nullopt when the system is inconsistent.
inline std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  // a pivot in the augmented column means b is outside the column space
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < r.rank; ++k) x[r.pivot_cols[k]] = r.reduced(k, a.cols());
  return x;
}

/// Orthogonal projection of x onto the orthogonal complement of
/// span(vectors), via the rational normal equations on an independent
/// subset of the spanning vectors. The perpendicularity of the result
/// to every input vector is re-checked exactly before returning.
inline RatVector project_onto_complement(const std::vector<RatVector>& vectors,
                                         const RatVector& x) {
  for (const auto& v : vectors)
    if (v.size() != x.size())
      throw std::invalid_argument("project_onto_complement: dimension mismatch");
  if (vectors.empty()) return x;

  const std::size_t m = x.size();
  RatMatrix span(m, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) span(i, j) = vectors[j][i];

  const std::vector<std::size_t> basis_cols = rref(span).pivot_cols;
  if (basis_cols.empty()) return x;  // all spanning vectors were zero

  RatMatrix basis(m, basis_cols.size());
  for (std::size_t j = 0; j < basis_cols.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) basis(i, j) = span(i, basis_cols[j]);

  // normal equations: (B^t B) t = B^t x, B^t B invertible on a basis
  const RatMatrix bt = transpose(basis);
  const std::size_t r = basis_cols.size();
  RatMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < m; ++k) s += basis(k, i) * basis(k, j);
      gram(i, j) = std::move(s);
    }
  const RatVector rhs = multiply(bt, x);
  const auto t = solve_linear(gram, rhs);
  if (!t) throw std::logic_error("project_onto_complement: singular normal equations");

  const RatVector proj = multiply(basis, *t);
  RatVector result(m);
  for (std::size_t i = 0; i < m; ++i) result[i] = x[i] - proj[i];

  for (const auto& v : vectors)
    if (dot(result, v) != 0)
      throw std::logic_error("project_onto_complement: residual not orthogonal to span");
  return result;
}

}  // namespace arbigeom
