#include "ybekit/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::size_t> parse_sizes(std::string_view list, std::string_view what) {
  std::vector<std::size_t> sizes;
  for (std::string_view item : split(list, ',')) {
    std::size_t value = 0;
    if (item.empty()) throw ParseError("empty entry in partition " + std::string(what));
    for (char ch : item) {
      if (ch < '0' || ch > '9') throw ParseError("bad partition " + std::string(what) + ": " + std::string(list));
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    sizes.push_back(value);
  }
  return sizes;
}

BlockPartition parse_partition_header(std::string_view line) {
  // "# partition rows=2,2 cols=2,2"
  std::istringstream in{std::string(line)};
  std::string hash, keyword, rows, cols, extra;
  in >> hash >> keyword >> rows >> cols;
  if (hash != "#" || keyword != "partition" || rows.rfind("rows=", 0) != 0 || cols.rfind("cols=", 0) != 0 ||
      (in >> extra)) {
    throw ParseError("malformed partition header: " + std::string(line));
  }
  return {parse_sizes(std::string_view(rows).substr(5), "rows"), parse_sizes(std::string_view(cols).substr(5), "cols")};
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

void write_rows(std::ostream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_scalar(m(r, c));
    }
    out << '\n';
  }
}

void write_sizes(std::ostream& out, const std::vector<std::size_t>& sizes) {
  for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
}

}  // namespace

PartitionedMatrix MatrixFile::partitioned() const {
  return partition ? PartitionedMatrix(matrix, *partition) : PartitionedMatrix(matrix);
}

MatrixFile read_matrix_csv(std::istream& in) {
  std::optional<BlockPartition> partition;
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (line.front() == '#') {
      if (partition || !rows.empty()) throw ParseError("partition header must be the first line");
      partition = parse_partition_header(line);
      continue;
    }
    std::vector<Scalar> row;
    for (std::string_view cell : split(line, ',')) {
      try {
        row.push_back(parse_scalar(cell));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(rows.front().size()) +
                       " entries, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix file has no rows");
  MatrixFile file{Matrix::from_rows(rows), partition};
  if (partition) (void)file.partitioned();  // validates the header against the order
  return file;
}

MatrixFile read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const Matrix& m) { write_rows(out, m); }

void write_matrix_csv(std::ostream& out, const PartitionedMatrix& m) {
  out << "# partition rows=";
  write_sizes(out, m.partition().row_sizes);
  out << " cols=";
  write_sizes(out, m.partition().col_sizes);
  out << '\n';
  write_rows(out, m.matrix());
}

void write_matrix_csv(const std::filesystem::path& path, const PartitionedMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix_csv(out, m);
}

}  // namespace ybekit
