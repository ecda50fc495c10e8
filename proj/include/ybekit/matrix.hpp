#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "ybekit/scalar.hpp"

namespace ybekit {

/// Dense row-major matrix of exact rationals.
///
/// Element access through operator() is 0-based, as usual for C++
/// containers. Everything that mirrors a mathematical formula (block
/// coordinates, permutations, basis indices) is 1-based.
class Matrix {
 public:
  /// rows x cols zero matrix; both counts must be positive.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  /// Row-list literal with integer entries, e.g. Matrix{{1, 0}, {0, 1}}.
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> entries() const noexcept { return data_; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix identity(std::size_t n);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
/// Zero entries of the left operand are skipped, so products with
/// permutation matrices cost O(n^2) per factor rather than O(n^3).
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& lambda, const Matrix& a);

inline Matrix add(const Matrix& a, const Matrix& b) { return a + b; }
inline Matrix multiply(const Matrix& a, const Matrix& b) { return a * b; }
inline Matrix scale(const Scalar& lambda, const Matrix& a) { return lambda * a; }
Matrix transpose(const Matrix& a);

/// Gauss-Jordan elimination over the rationals, first nonzero pivot.
/// Throws DimensionError for non-square input, SingularMatrixError otherwise.
Matrix inverse(const Matrix& a);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& c);

/// Square, 0/1 entries, exactly one 1 in every row and every column.
bool is_permutation_matrix(const Matrix& a);

/// Matrix P with P e_j = e_{image[j-1]}; `image` is 1-based one-line notation.
Matrix permutation_matrix(std::span<const std::size_t> image);

/// K_mn = sum_{i,j} E_ij (x) E_ij^T with E_ij of order m x n.
Matrix commutation_matrix(std::size_t m, std::size_t n);

std::ostream& operator<<(std::ostream& os, const Matrix& a);

}  // namespace ybekit
