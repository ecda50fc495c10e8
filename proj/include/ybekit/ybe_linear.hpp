#pragma once

#include <cstddef>
#include <optional>

#include "ybekit/blockmat.hpp"
#include "ybekit/set_solution.hpp"

namespace ybekit {

/// Matrix of an operator on V (x) V, dim V = n, in the lexicographically
/// ordered basis e_i (x) e_j -> pair_to_index(i, j, n), partitioned into
/// n*n square blocks of order n.
struct RepMatrix {
  std::size_t n;
  PartitionedMatrix matrix;
};

/// Column pair(i,j) carries a single 1 at row pair(sigma_i(j), gamma_j(i)).
/// With `require_valid` set, throws PreconditionError unless s is
/// non-degenerate, involutive and braided.
RepMatrix representing_matrix(const SetSolution& s, bool require_valid = true);

/// Braid form (c (x) I)(I (x) c)(c (x) I) = (I (x) c)(c (x) I)(I (x) c),
/// compared exactly on order n^3. Throws DimensionError unless c has order n^2.
bool ybe_check_matrix(const Matrix& c, std::size_t n);

/// Same relation through structure constants c_ij^kl (the entry at row
/// pair(k,l), column pair(i,j)):
///   sum_{p,q,y} c_ij^pq c_qk^yn c_py^lm = sum_{y,q,r} c_jk^qr c_iq^ly c_yr^mn
/// for every (i,j,k,l,m,n). Zero coefficients are skipped, nothing else.
bool ybe_check_scalar(const Matrix& c, std::size_t n);

/// Permutation matrix of the flip e_i (x) e_j -> e_j (x) e_i.
Matrix flip_matrix(std::size_t n);

enum class FlipSide { left, right };

/// tau * c (left) or c * tau (right).
Matrix compose_flip(const Matrix& c, std::size_t n, FlipSide side);

/// Operator on V^(x)3 acting as m on tensor factors (a, b) and as the
/// identity on the third. (1,2) is m (x) I, (2,3) is I (x) m, and (1,3) is
/// built by relabeling basis indices directly. Throws DimensionError for a
/// pair other than (1,2), (1,3), (2,3), or if m is not of order n^2.
Matrix embed_on_factors(const Matrix& m, std::size_t n, std::size_t a, std::size_t b);

/// R12 R13 R23 = R23 R13 R12 on order n^3.
bool qybe_check(const Matrix& r, std::size_t n);

/// 1-based location of an entry inside a block grid.
struct BlockPosition {
  std::size_t block_row;
  std::size_t block_col;
  std::size_t inner_row;
  std::size_t inner_col;

  friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

/// Position of the single 1 in block B_ij of representing_matrix(s):
/// inner (sigma_i^-1(j), sigma_j^-1(i)). Needs s non-degenerate,
/// involutive and braided (PreconditionError); IndexError on bad i, j.
BlockPosition block_nonzero_position(const SetSolution& s, std::size_t i, std::size_t j);

/// Same for block E_ij (1 <= i, j <= nm) of the matrix of
/// direct_product(sx, sy), with hat/bar coordinates taken modulo m = |Y|:
///   ((sigma^-1_hat(i)(hat j) - 1) m + alpha^-1_bar(i)(bar j),
///    (sigma^-1_hat(j)(hat i) - 1) m + alpha^-1_bar(j)(bar i)).
BlockPosition direct_rep_position(const SetSolution& sx, const SetSolution& sy, std::size_t i, std::size_t j);

/// Factor-block coordinates of block (i, j) of c [x] d when d has m x m
/// blocks: that block equals B_{hat i, hat j} (x) B'_{bar i, bar j}.
struct BlockSource {
  std::size_t row_hat;
  std::size_t col_hat;
  std::size_t row_bar;
  std::size_t col_bar;

  friend bool operator==(const BlockSource&, const BlockSource&) = default;
};

/// Throws IndexError unless 1 <= i, j <= nm (n defaults to m when 0).
BlockSource tracy_block_source(std::size_t i, std::size_t j, std::size_t m, std::size_t n = 0);

/// First entry where two equally sized matrices differ. 1-based.
struct EntryMismatch {
  std::size_t row;
  std::size_t col;
  Scalar expected;
  Scalar found;
};

std::optional<EntryMismatch> first_mismatch(const Matrix& expected, const Matrix& found);

struct ProductComparison {
  bool holds;
  /// expected = entry of c [x] d, found = entry of the product's matrix e.
  std::optional<EntryMismatch> mismatch;
};

/// Compares e = representing_matrix(product) with c [x] d, where c and d
/// are the matrices of sx and sy. Throws DimensionError if the product size
/// is not |X||Y|.
ProductComparison compare_with_tracy_singh(const SetSolution& sx, const SetSolution& sy, const SetSolution& product,
                                        bool require_valid = true);

/// compare_with_tracy_singh(sx, sy, direct_product(sx, sy)). With
/// `require_valid` set, both factors must be non-degenerate, involutive and
/// braided (PreconditionError otherwise).
ProductComparison verify_theorem_a(const SetSolution& sx, const SetSolution& sy, bool require_valid = true);

/// ybe_check_matrix(p^-1 c p, n). Throws SingularMatrixError / DimensionError.
bool conjugate_check(const Matrix& c, const Matrix& p, std::size_t n);

}  // namespace ybekit
