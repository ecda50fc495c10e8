#pragma once

#include <cstddef>
#include <vector>

#include "ybekit/matrix.hpp"

namespace ybekit {

/// Row-block heights and column-block widths of a partitioned matrix.
struct BlockPartition {
  std::vector<std::size_t> row_sizes;
  std::vector<std::size_t> col_sizes;

  /// A single block covering a rows x cols matrix.
  static BlockPartition trivial(std::size_t rows, std::size_t cols);
  /// block_rows x block_cols grid of identical block_height x block_width blocks.
  static BlockPartition uniform(std::size_t block_rows, std::size_t block_cols, std::size_t block_height,
                                std::size_t block_width);
  /// n*n grid of n x n blocks, the layout of an operator on V (x) V with dim V = n.
  static BlockPartition square_blocks(std::size_t n) { return uniform(n, n, n, n); }

  std::size_t block_rows() const noexcept { return row_sizes.size(); }
  std::size_t block_cols() const noexcept { return col_sizes.size(); }
  std::size_t total_rows() const noexcept;
  std::size_t total_cols() const noexcept;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

BlockPartition transpose(const BlockPartition& p);

/// A matrix together with a consistent block partition.
class PartitionedMatrix {
 public:
  /// Throws DimensionError if the partition has a zero-sized block or does
  /// not sum to the matrix order.
  PartitionedMatrix(Matrix matrix, BlockPartition partition);
  /// Single-block partition.
  explicit PartitionedMatrix(Matrix matrix);

  const Matrix& matrix() const noexcept { return matrix_; }
  const BlockPartition& partition() const noexcept { return partition_; }

  friend bool operator==(const PartitionedMatrix&, const PartitionedMatrix&) = default;

 private:
  Matrix matrix_;
  BlockPartition partition_;
};

/// Copy of block (i, j), 1-based. Throws IndexError.
Matrix block(const PartitionedMatrix& p, std::size_t i, std::size_t j);

/// Inverse of block(): stitches a grid of blocks back together. All blocks
/// in a block row share a height and all blocks in a block column a width.
PartitionedMatrix assemble_blocks(const std::vector<std::vector<Matrix>>& grid);

/// Block Kronecker product. Block ((i,k),(j,l)) of the result is
/// A_ij (x) B_kl, with block rows ordered i-major, k-minor (and likewise
/// for columns). For single-block inputs this is the Kronecker product.
PartitionedMatrix tracy_singh(const PartitionedMatrix& a, const PartitionedMatrix& b);

/// Block (i,j) of the result is A_ij (x) B_ij. Both inputs need the same
/// block-grid shape; throws DimensionError otherwise.
PartitionedMatrix khatri_rao(const PartitionedMatrix& a, const PartitionedMatrix& b);

PartitionedMatrix transpose(const PartitionedMatrix& p);
/// Inverse carrying the transposed partition, so A^-1 composes with A blockwise.
PartitionedMatrix inverse(const PartitionedMatrix& p);
PartitionedMatrix operator+(const PartitionedMatrix& a, const PartitionedMatrix& b);
/// Product carrying (a's row sizes, b's column sizes). Requires a's column
/// partition to equal b's row partition.
PartitionedMatrix operator*(const PartitionedMatrix& a, const PartitionedMatrix& b);
PartitionedMatrix operator*(const Scalar& lambda, const PartitionedMatrix& a);

}  // namespace ybekit
