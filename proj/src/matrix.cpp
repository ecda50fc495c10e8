#include "ybekit/matrix.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

void require_positive(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": operands of order " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_positive(rows, cols);
  data_.resize(rows * cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require_positive(rows, cols);
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  require_positive(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionError("matrix must be non-empty");
  const std::size_t cols = rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtract");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  Scalar term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        term = aik * bkj;
        out(i, j) += term;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& lambda, const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= lambda;
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = identity(n);
  Scalar factor;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(work(pivot, col))) ++pivot;
    if (pivot == n) throw SingularMatrixError("inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        swap(work(pivot, c), work(col, c));
        swap(inv(pivot, c), inv(col, c));
      }
    }
    const Scalar scale_by = 1 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale_by;
      inv(col, c) *= scale_by;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(work(r, col))) continue;
      factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  }
  return out;
}

Matrix hadamard(const Matrix& a, const Matrix& c) {
  require_same_shape(a, c, "hadamard");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t col = 0; col < a.cols(); ++col) out(r, col) *= c(r, col);
  return out;
}

bool is_permutation_matrix(const Matrix& a) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  std::vector<int> col_count(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    int row_count = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar& v = a(r, c);
      if (is_zero(v)) continue;
      if (v != 1) return false;
      ++row_count;
      ++col_count[c];
    }
    if (row_count != 1) return false;
  }
  for (int count : col_count) {
    if (count != 1) return false;
  }
  return true;
}

Matrix permutation_matrix(std::span<const std::size_t> image) {
  const std::size_t n = image.size();
  Matrix p(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t target = image[j];
    if (target < 1 || target > n || seen[target - 1]) {
      throw PreconditionError("permutation_matrix: image is not a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[target - 1] = true;
    p(target - 1, j) = 1;
  }
  return p;
}

Matrix commutation_matrix(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DimensionError("commutation_matrix: m and n must be positive");
  // E_ij (x) E_ij^T has its single 1 at row i*n + j, column j*m + i (0-based).
  Matrix k(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i * n + j, j * m + i) = 1;
  return k;
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? ", " : "") << a(r, c).get_str();
    os << (r + 1 == a.rows() ? "]]" : "]\n");
  }
  return os;
}

}  // namespace ybekit
