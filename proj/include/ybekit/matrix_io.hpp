#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "ybekit/blockmat.hpp"

namespace ybekit {

/// Matrix read from CSV, with the partition header if one was present.
struct MatrixFile {
  Matrix matrix;
  std::optional<BlockPartition> partition;

  /// The stored partition, or a single block when none was given.
  PartitionedMatrix partitioned() const;
};

/// CSV matrix format: one row per line, comma-separated exact fractions
/// ("-3/2", "0", "7"). An optional first line
///
///     # partition rows=2,2 cols=2,2
///
/// carries the block partition. Blank lines are ignored. Throws ParseError
/// on malformed text and DimensionError if the header does not fit.
MatrixFile read_matrix_csv(std::istream& in);
MatrixFile read_matrix_csv(const std::filesystem::path& path);

void write_matrix_csv(std::ostream& out, const Matrix& m);
void write_matrix_csv(std::ostream& out, const PartitionedMatrix& m);
void write_matrix_csv(const std::filesystem::path& path, const PartitionedMatrix& m);

}  // namespace ybekit
