#include "ybekit/blockmat.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

std::vector<std::size_t> offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> out(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), out.begin() + 1);
  return out;
}

void copy_into(Matrix& dst, const Matrix& src, std::size_t row0, std::size_t col0) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) dst(row0 + r, col0 + c) = src(r, c);
}

}  // namespace

BlockPartition BlockPartition::trivial(std::size_t rows, std::size_t cols) { return {{rows}, {cols}}; }

BlockPartition BlockPartition::uniform(std::size_t block_rows, std::size_t block_cols, std::size_t block_height,
                                       std::size_t block_width) {
  return {std::vector<std::size_t>(block_rows, block_height), std::vector<std::size_t>(block_cols, block_width)};
}

std::size_t BlockPartition::total_rows() const noexcept {
  return std::accumulate(row_sizes.begin(), row_sizes.end(), std::size_t{0});
}

std::size_t BlockPartition::total_cols() const noexcept {
  return std::accumulate(col_sizes.begin(), col_sizes.end(), std::size_t{0});
}

BlockPartition transpose(const BlockPartition& p) { return {p.col_sizes, p.row_sizes}; }

PartitionedMatrix::PartitionedMatrix(Matrix matrix, BlockPartition partition)
    : matrix_(std::move(matrix)), partition_(std::move(partition)) {
  auto positive = [](const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) return false;
    for (std::size_t s : sizes)
      if (s == 0) return false;
    return true;
  };
  if (!positive(partition_.row_sizes) || !positive(partition_.col_sizes)) {
    throw DimensionError("partition block sizes must be positive");
  }
  if (partition_.total_rows() != matrix_.rows() || partition_.total_cols() != matrix_.cols()) {
    throw DimensionError("partition sums " + std::to_string(partition_.total_rows()) + "x" +
                         std::to_string(partition_.total_cols()) + " do not match matrix order " +
                         std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  }
}

PartitionedMatrix::PartitionedMatrix(Matrix matrix)
    : PartitionedMatrix(matrix, BlockPartition::trivial(matrix.rows(), matrix.cols())) {}

Matrix block(const PartitionedMatrix& p, std::size_t i, std::size_t j) {
  const BlockPartition& part = p.partition();
  if (i < 1 || i > part.block_rows() || j < 1 || j > part.block_cols()) {
    throw IndexError("block (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                     std::to_string(part.block_rows()) + "x" + std::to_string(part.block_cols()) + " grid");
  }
  const auto ro = offsets(part.row_sizes);
  const auto co = offsets(part.col_sizes);
  Matrix out(part.row_sizes[i - 1], part.col_sizes[j - 1]);
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = p.matrix()(ro[i - 1] + r, co[j - 1] + c);
  return out;
}

PartitionedMatrix assemble_blocks(const std::vector<std::vector<Matrix>>& grid) {
  if (grid.empty() || grid.front().empty()) throw DimensionError("assemble_blocks: empty grid");
  BlockPartition part;
  for (const auto& row : grid) {
    if (row.size() != grid.front().size()) throw DimensionError("assemble_blocks: ragged grid");
    part.row_sizes.push_back(row.front().rows());
  }
  for (const auto& b : grid.front()) part.col_sizes.push_back(b.cols());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      if (grid[i][j].rows() != part.row_sizes[i] || grid[i][j].cols() != part.col_sizes[j]) {
        throw DimensionError("assemble_blocks: block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") does not fit its row/column");
      }
    }
  }
  Matrix out(part.total_rows(), part.total_cols());
  const auto ro = offsets(part.row_sizes);
  const auto co = offsets(part.col_sizes);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j) copy_into(out, grid[i][j], ro[i], co[j]);
  return PartitionedMatrix(std::move(out), std::move(part));
}

PartitionedMatrix tracy_singh(const PartitionedMatrix& a, const PartitionedMatrix& b) {
  const BlockPartition& pa = a.partition();
  const BlockPartition& pb = b.partition();
  BlockPartition part;
  for (std::size_t mi : pa.row_sizes)
    for (std::size_t pk : pb.row_sizes) part.row_sizes.push_back(mi * pk);
  for (std::size_t nj : pa.col_sizes)
    for (std::size_t ql : pb.col_sizes) part.col_sizes.push_back(nj * ql);

  Matrix out(part.total_rows(), part.total_cols());
  const auto ro = offsets(part.row_sizes);
  const auto co = offsets(part.col_sizes);
  for (std::size_t i = 0; i < pa.block_rows(); ++i) {
    for (std::size_t j = 0; j < pa.block_cols(); ++j) {
      const Matrix aij = block(a, i + 1, j + 1);
      for (std::size_t k = 0; k < pb.block_rows(); ++k) {
        for (std::size_t l = 0; l < pb.block_cols(); ++l) {
          const std::size_t br = i * pb.block_rows() + k;
          const std::size_t bc = j * pb.block_cols() + l;
          copy_into(out, kronecker(aij, block(b, k + 1, l + 1)), ro[br], co[bc]);
        }
      }
    }
  }
  return PartitionedMatrix(std::move(out), std::move(part));
}

PartitionedMatrix khatri_rao(const PartitionedMatrix& a, const PartitionedMatrix& b) {
  const BlockPartition& pa = a.partition();
  const BlockPartition& pb = b.partition();
  if (pa.block_rows() != pb.block_rows() || pa.block_cols() != pb.block_cols()) {
    throw DimensionError("khatri_rao: block grids " + std::to_string(pa.block_rows()) + "x" +
                         std::to_string(pa.block_cols()) + " and " + std::to_string(pb.block_rows()) + "x" +
                         std::to_string(pb.block_cols()) + " differ");
  }
  std::vector<std::vector<Matrix>> grid(pa.block_rows());
  for (std::size_t i = 0; i < pa.block_rows(); ++i)
    for (std::size_t j = 0; j < pa.block_cols(); ++j)
      grid[i].push_back(kronecker(block(a, i + 1, j + 1), block(b, i + 1, j + 1)));
  return assemble_blocks(grid);
}

PartitionedMatrix transpose(const PartitionedMatrix& p) {
  return PartitionedMatrix(transpose(p.matrix()), transpose(p.partition()));
}

PartitionedMatrix inverse(const PartitionedMatrix& p) {
  return PartitionedMatrix(inverse(p.matrix()), transpose(p.partition()));
}

PartitionedMatrix operator+(const PartitionedMatrix& a, const PartitionedMatrix& b) {
  if (a.partition() != b.partition()) throw DimensionError("add: partitions differ");
  return PartitionedMatrix(a.matrix() + b.matrix(), a.partition());
}

PartitionedMatrix operator*(const PartitionedMatrix& a, const PartitionedMatrix& b) {
  if (a.partition().col_sizes != b.partition().row_sizes) {
    throw DimensionError("multiply: column partition of the left factor must equal row partition of the right");
  }
  return PartitionedMatrix(a.matrix() * b.matrix(), {a.partition().row_sizes, b.partition().col_sizes});
}

PartitionedMatrix operator*(const Scalar& lambda, const PartitionedMatrix& a) {
  return PartitionedMatrix(lambda * a.matrix(), a.partition());
}

}  // namespace ybekit
