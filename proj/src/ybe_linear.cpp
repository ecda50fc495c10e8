#include "ybekit/ybe_linear.hpp"

#include <string>
#include <vector>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

void require_order(const Matrix& c, std::size_t n, const char* op) {
  if (n == 0 || c.rows() != n * n || c.cols() != n * n) {
    throw DimensionError(std::string(op) + ": expected a square matrix of order " + std::to_string(n * n));
  }
}

void require_valid_solution(const SetSolution& s, const char* op) {
  const CheckReport r = check(s);
  if (!r.is_valid_solution()) {
    throw PreconditionError(std::string(op) + ": solution must be non-degenerate, involutive and braided");
  }
}

// Basis index of e_a (x) e_b (x) e_c, 0-based digits.
std::size_t triple_index(std::size_t a, std::size_t b, std::size_t c, std::size_t n) { return (a * n + b) * n + c; }

}  // namespace

RepMatrix representing_matrix(const SetSolution& s, bool require_valid) {
  if (require_valid) require_valid_solution(s, "representing_matrix");
  const std::size_t n = s.size();
  Matrix m(n * n, n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const auto [k, l] = apply_r(s, i, j);
      m(pair_to_index(k, l, n) - 1, pair_to_index(i, j, n) - 1) = 1;
    }
  }
  return {n, PartitionedMatrix(std::move(m), BlockPartition::square_blocks(n))};
}

bool ybe_check_matrix(const Matrix& c, std::size_t n) {
  require_order(c, n, "ybe_check_matrix");
  const Matrix id = identity(n);
  const Matrix c12 = kronecker(c, id);
  const Matrix c23 = kronecker(id, c);
  return c12 * c23 * c12 == c23 * c12 * c23;
}

bool ybe_check_scalar(const Matrix& c, std::size_t n) {
  require_order(c, n, "ybe_check_scalar");
  // coef(i,j,k,l) = c_ij^kl, 0-based digits.
  auto coef = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> const Scalar& {
    return c(k * n + l, i * n + j);
  };
  std::vector<Scalar> lhs(n * n * n), rhs(n * n * n);
  Scalar term;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (auto& v : lhs) v = 0;
        for (auto& v : rhs) v = 0;
        // sum_{p,q,y} c_ij^pq c_qk^yn c_py^lm, accumulated at (l, m, n).
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            const Scalar& a = coef(i, j, p, q);
            if (is_zero(a)) continue;
            for (std::size_t y = 0; y < n; ++y)
              for (std::size_t nn = 0; nn < n; ++nn) {
                const Scalar& b = coef(q, k, y, nn);
                if (is_zero(b)) continue;
                for (std::size_t l = 0; l < n; ++l)
                  for (std::size_t mm = 0; mm < n; ++mm) {
                    const Scalar& g = coef(p, y, l, mm);
                    if (is_zero(g)) continue;
                    term = a * b * g;
                    lhs[triple_index(l, mm, nn, n)] += term;
                  }
              }
          }
        // sum_{y,q,r} c_jk^qr c_iq^ly c_yr^mn, accumulated at (l, m, n).
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t r = 0; r < n; ++r) {
            const Scalar& a = coef(j, k, q, r);
            if (is_zero(a)) continue;
            for (std::size_t l = 0; l < n; ++l)
              for (std::size_t y = 0; y < n; ++y) {
                const Scalar& b = coef(i, q, l, y);
                if (is_zero(b)) continue;
                for (std::size_t mm = 0; mm < n; ++mm)
                  for (std::size_t nn = 0; nn < n; ++nn) {
                    const Scalar& g = coef(y, r, mm, nn);
                    if (is_zero(g)) continue;
                    term = a * b * g;
                    rhs[triple_index(l, mm, nn, n)] += term;
                  }
              }
          }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Matrix flip_matrix(std::size_t n) {
  if (n == 0) throw DimensionError("flip_matrix: n must be positive");
  Matrix tau(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tau(j * n + i, i * n + j) = 1;
  return tau;
}

Matrix compose_flip(const Matrix& c, std::size_t n, FlipSide side) {
  require_order(c, n, "compose_flip");
  const Matrix tau = flip_matrix(n);
  return side == FlipSide::left ? tau * c : c * tau;
}

Matrix embed_on_factors(const Matrix& m, std::size_t n, std::size_t a, std::size_t b) {
  require_order(m, n, "embed_on_factors");
  const Matrix id = identity(n);
  if (a == 1 && b == 2) return kronecker(m, id);
  if (a == 2 && b == 3) return kronecker(id, m);
  if (a == 1 && b == 3) {
    // Swap tensor factors 2 and 3, act on (1,2), swap back.
    Matrix swap23(n * n * n, n * n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) swap23(triple_index(x, z, y, n), triple_index(x, y, z, n)) = 1;
    return swap23 * kronecker(m, id) * swap23;
  }
  throw DimensionError("embed_on_factors: factor pair must be (1,2), (1,3) or (2,3)");
}

bool qybe_check(const Matrix& r, std::size_t n) {
  require_order(r, n, "qybe_check");
  const Matrix r12 = embed_on_factors(r, n, 1, 2);
  const Matrix r13 = embed_on_factors(r, n, 1, 3);
  const Matrix r23 = embed_on_factors(r, n, 2, 3);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

BlockPosition block_nonzero_position(const SetSolution& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.size();
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("block_nonzero_position: block index out of range");
  require_valid_solution(s, "block_nonzero_position");
  return {i, j, s.sigma_permutation(i).inverse()(j), s.sigma_permutation(j).inverse()(i)};
}

BlockPosition direct_rep_position(const SetSolution& sx, const SetSolution& sy, std::size_t i, std::size_t j) {
  const std::size_t n = sx.size();
  const std::size_t m = sy.size();
  if (i < 1 || i > n * m || j < 1 || j > n * m) throw IndexError("direct_rep_position: block index out of range");
  const auto [ih, ib] = index_to_pair(i, m);
  const auto [jh, jb] = index_to_pair(j, m);
  auto sigma_inv = [&](std::size_t x, std::size_t y) { return sx.sigma_permutation(x).inverse()(y); };
  auto alpha_inv = [&](std::size_t x, std::size_t y) { return sy.sigma_permutation(x).inverse()(y); };
  return {i, j, (sigma_inv(ih, jh) - 1) * m + alpha_inv(ib, jb), (sigma_inv(jh, ih) - 1) * m + alpha_inv(jb, ib)};
}

BlockSource tracy_block_source(std::size_t i, std::size_t j, std::size_t m, std::size_t n) {
  if (n == 0) n = m;
  if (m == 0 || i < 1 || j < 1 || i > n * m || j > n * m) {
    throw IndexError("tracy_block_source: block index out of range");
  }
  const auto [ih, ib] = index_to_pair(i, m);
  const auto [jh, jb] = index_to_pair(j, m);
  return {ih, jh, ib, jb};
}

std::optional<EntryMismatch> first_mismatch(const Matrix& expected, const Matrix& found) {
  if (expected.rows() != found.rows() || expected.cols() != found.cols()) {
    throw DimensionError("first_mismatch: matrices differ in order");
  }
  for (std::size_t r = 0; r < expected.rows(); ++r)
    for (std::size_t c = 0; c < expected.cols(); ++c)
      if (expected(r, c) != found(r, c)) return EntryMismatch{r + 1, c + 1, expected(r, c), found(r, c)};
  return std::nullopt;
}

ProductComparison compare_with_tracy_singh(const SetSolution& sx, const SetSolution& sy, const SetSolution& product,
                                        bool require_valid) {
  if (product.size() != sx.size() * sy.size()) {
    throw DimensionError("compare_with_tracy_singh: product must have |X||Y| elements");
  }
  const RepMatrix c = representing_matrix(sx, require_valid);
  const RepMatrix d = representing_matrix(sy, require_valid);
  const RepMatrix e = representing_matrix(product, require_valid);
  const PartitionedMatrix cd = tracy_singh(c.matrix, d.matrix);
  auto mismatch = first_mismatch(cd.matrix(), e.matrix.matrix());
  return {!mismatch.has_value(), std::move(mismatch)};
}

ProductComparison verify_theorem_a(const SetSolution& sx, const SetSolution& sy, bool require_valid) {
  if (require_valid) {
    require_valid_solution(sx, "verify_theorem_a");
    require_valid_solution(sy, "verify_theorem_a");
  }
  return compare_with_tracy_singh(sx, sy, direct_product(sx, sy), require_valid);
}

bool conjugate_check(const Matrix& c, const Matrix& p, std::size_t n) {
  require_order(c, n, "conjugate_check");
  if (p.rows() != c.rows() || p.cols() != c.cols()) throw DimensionError("conjugate_check: p must match c");
  return ybe_check_matrix(inverse(p) * c * p, n);
}

}  // namespace ybekit
