#pragma once

// Small dense matrices, determinants and Vandermonde products over exact and
// multiprecision scalars.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "supergroup/numeric.hpp"

namespace supergroup {

inline bool is_zero(long v) { return v == 0; }
inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// Row-major construction from nested lists; all rows must have equal length.
  explicit Matrix(const std::vector<std::vector<T>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix out;
    out.rows_ = rows_ - 1;
    out.cols_ = cols_ - 1;
    out.data_.reserve(out.rows_ * out.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != col) out.data_.push_back((*this)(i, j));
      }
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols || rows == 0) throw std::invalid_argument("determinant needs a non-empty square matrix");
}

inline BigComplex one_like(const BigComplex& x) { return {1, x.bits()}; }
inline BigRational one_like(const BigRational&) { return 1; }
inline GaussianRational one_like(const GaussianRational&) { return 1; }
inline BigInt one_like(const BigInt&) { return 1; }
inline long one_like(long) { return 1; }

// Pivot choice: largest magnitude for floating entries, first non-zero for exact ones.
inline std::size_t choose_pivot(const Matrix<BigComplex>& a, std::size_t col) {
  std::size_t best = col;
  long best_exp = 0;
  bool found = false;
  for (std::size_t i = col; i < a.rows(); ++i) {
    if (a(i, col).is_zero()) continue;
    const long e = a(i, col).magnitude_exponent();
    if (!found || e > best_exp) {
      best = i;
      best_exp = e;
      found = true;
    }
  }
  return found ? best : a.rows();
}

template <class T>
std::size_t choose_pivot(const Matrix<T>& a, std::size_t col) {
  for (std::size_t i = col; i < a.rows(); ++i) {
    if (!is_zero(a(i, col))) return i;
  }
  return a.rows();
}

}  // namespace detail

/// Determinant by Gaussian elimination with row pivoting (largest magnitude for
/// BigComplex, first non-zero for exact scalars). A column without any pivot gives 0.
template <class T>
T determinant(Matrix<T> a) {
  detail::require_square(a.rows(), a.cols());
  const std::size_t n = a.rows();
  T det = detail::one_like(a(0, 0));
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = detail::choose_pivot(a, c);
    if (p == n) return det - det;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    const T pivot = a(c, c);
    det *= pivot;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const T factor = a(i, c) / pivot;
      for (std::size_t j = c + 1; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

/// Laplace expansion along the first row; exponential cost, used as an oracle.
template <class T>
T determinant_cofactor(const Matrix<T>& a) {
  detail::require_square(a.rows(), a.cols());
  if (a.rows() == 1) return a(0, 0);
  T sum = a(0, 0) - a(0, 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_zero(a(0, j))) continue;
    T term = a(0, j) * determinant_cofactor(a.minor(0, j));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// prod_{i<j} (values[i] - values[j]); 1 for fewer than two entries.
template <class T>
T vandermonde(const std::vector<T>& values, const T& one) {
  T result = one;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) result *= values[i] - values[j];
  }
  return result;
}

inline BigInt vandermonde(const std::vector<long>& values) {
  BigInt result = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) result *= values[i] - values[j];
  }
  return result;
}

inline BigRational vandermonde(const std::vector<BigRational>& values) { return vandermonde(values, BigRational(1)); }

/// Complex inputs: the empty product is 1 at `bits` (or at the entries' precision otherwise).
inline BigComplex vandermonde(const std::vector<BigComplex>& values, Bits bits = kDefaultBits) {
  return vandermonde(values, BigComplex(1, values.empty() ? bits : values.front().bits()));
}

}  // namespace supergroup
