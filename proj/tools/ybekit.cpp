// ybekit: partitioned-matrix products, set-theoretic Yang-Baxter solutions
// and the Tracy-Singh / direct-product check from the command line.
//
// Exit codes: 0 success or "true", 1 a check came out false,
// 2 unreadable input or bad usage, 3 dimension/partition/range error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ybekit/blockmat.hpp"
#include "ybekit/enumeration.hpp"
#include "ybekit/errors.hpp"
#include "ybekit/matrix_io.hpp"
#include "ybekit/solution_io.hpp"
#include "ybekit/ybe_linear.hpp"

namespace fs = std::filesystem;
using namespace ybekit;

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kParse = 2, kDimension = 3 };

constexpr std::size_t kDefaultMaxN = 4;
constexpr std::size_t kLargeMaxN = 5;

void emit_matrix(const std::string& out, const PartitionedMatrix& m, bool with_partition) {
  if (out.empty() || out == "-") {
    with_partition ? write_matrix_csv(std::cout, m) : write_matrix_csv(std::cout, m.matrix());
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  with_partition ? write_matrix_csv(f, m) : write_matrix_csv(f, m.matrix());
}

SetSolution load_single(const std::string& path) {
  auto sols = load_solutions(path);
  if (sols.size() != 1) throw ParseError(path + ": expected exactly one solution, found " + std::to_string(sols.size()));
  return sols.front();
}

std::string sizes_of(const std::vector<SetSolution>& sols) {
  std::set<std::size_t> sizes;
  for (const auto& s : sols) sizes.insert(s.size());
  std::string out;
  for (std::size_t n : sizes) out += (out.empty() ? "" : ",") + std::to_string(n);
  return out;
}

std::size_t enumeration_cap(bool allow_large) {
  std::size_t cap = kDefaultMaxN;
  if (const char* env = std::getenv("YBEKIT_MAX_N")) {
    try {
      cap = std::stoul(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("YBEKIT_MAX_N is not a number: ") + env);
    }
  }
  return allow_large ? std::max(cap, kLargeMaxN) : cap;
}

void print_result(const char* name, const CheckResult& r) {
  std::cout << name << ' ' << (r.holds ? "true" : "false");
  if (r.witness) std::cout << " witness=" << to_string(*r.witness);
  std::cout << '\n';
}

// ------------------------------------------------------------- commands

int cmd_product(const std::string& op, const std::string& a_path, const std::string& b_path,
                const std::string& out) {
  const MatrixFile a = read_matrix_csv(fs::path(a_path));
  const MatrixFile b = read_matrix_csv(fs::path(b_path));
  if (op == "kronecker") {
    emit_matrix(out, PartitionedMatrix(kronecker(a.matrix, b.matrix)), false);
  } else if (op == "hadamard") {
    emit_matrix(out, PartitionedMatrix(hadamard(a.matrix, b.matrix)), false);
  } else if (op == "tracy-singh") {
    emit_matrix(out, tracy_singh(a.partitioned(), b.partitioned()), true);
  } else {
    emit_matrix(out, khatri_rao(a.partitioned(), b.partitioned()), true);
  }
  return kOk;
}

int cmd_check(const std::string& path) {
  const CheckReport report = check(load_single(path));
  print_result("nondegenerate", report.nondegenerate);
  print_result("involutive", report.involutive);
  print_result("braided", report.braided);
  print_result("square_free", report.square_free);
  print_result("trivial", report.trivial);
  return report.is_valid_solution() ? kOk : kFalse;
}

int cmd_repmat(const std::string& path, const std::string& flip, const std::string& out) {
  const RepMatrix rep = representing_matrix(load_single(path));
  if (flip.empty()) {
    emit_matrix(out, rep.matrix, true);
  } else {
    const FlipSide side = flip == "left" ? FlipSide::left : FlipSide::right;
    emit_matrix(out, PartitionedMatrix(compose_flip(rep.matrix.matrix(), rep.n, side), rep.matrix.partition()), true);
  }
  return kOk;
}

int cmd_direct_product(const std::string& x_path, const std::string& y_path, const std::string& out) {
  const SetSolution z = direct_product(load_single(x_path), load_single(y_path));
  if (out.empty() || out == "-") {
    std::cout << to_json(z) << '\n';
  } else {
    write_solution(out, z);
  }
  return kOk;
}

int cmd_verify_theorem_a(const std::string& x_path, const std::string& y_path, const std::string& product_path,
                         bool no_check) {
  const std::vector<SetSolution> xs = load_solutions(x_path);
  const std::vector<SetSolution> ys = load_solutions(y_path);
  if (xs.empty() || ys.empty()) throw ParseError("no solutions to verify");
  std::optional<SetSolution> product;
  if (!product_path.empty()) {
    if (xs.size() != 1 || ys.size() != 1) throw ParseError("--product needs exactly one solution per factor");
    product = load_single(product_path);
  }
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < ys.size(); ++b) {
      const ProductComparison result = product ? compare_with_tracy_singh(xs[a], ys[b], *product, !no_check)
                                              : verify_theorem_a(xs[a], ys[b], !no_check);
      if (!result.holds) {
        const EntryMismatch& w = *result.mismatch;
        std::cout << "THEOREM_A FAIL at (" << w.row << "," << w.col << ")\n";
        std::cout << "witness pair=(" << a + 1 << "," << b + 1 << ") tracy_singh=" << format_scalar(w.expected)
                  << " product=" << format_scalar(w.found) << '\n';
        return kFalse;
      }
      ++pairs;
    }
  }
  std::cout << "THEOREM_A ok n=" << sizes_of(xs) << " m=" << sizes_of(ys) << " pairs=" << pairs << '\n';
  return kOk;
}

int cmd_enumerate(std::size_t n, bool dedupe, const std::string& out_dir, const std::string& jsonl, bool allow_large,
                  unsigned threads) {
  const std::size_t cap = enumeration_cap(allow_large);
  if (n < 1 || n > cap) {
    std::cerr << "error: n must be in 1.." << cap << " (set YBEKIT_MAX_N or pass --allow-large)\n";
    return kDimension;
  }
  EnumerationConfig cfg;
  cfg.n = n;
  cfg.threads = threads;
  std::vector<SetSolution> sols = enumerate_solutions(cfg);
  std::cout << sols.size() << " solutions\n";
  if (dedupe) {
    DedupeResult classes = dedupe_up_to_iso(sols);
    std::cout << classes.representatives.size() << " classes\n";
    for (std::size_t k = 0; k < classes.class_sizes.size(); ++k)
      std::cout << "class " << k + 1 << " size=" << classes.class_sizes[k] << '\n';
    sols = std::move(classes.representatives);
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t k = 0; k < sols.size(); ++k) {
      std::ostringstream name;
      name << "solution_" << std::setw(4) << std::setfill('0') << k + 1 << ".json";
      write_solution(fs::path(out_dir) / name.str(), sols[k]);
    }
  }
  if (!jsonl.empty()) {
    std::ofstream f(jsonl);
    if (!f) throw std::runtime_error("cannot write " + jsonl);
    write_solutions_jsonl(f, sols);
  }
  return kOk;
}

int cmd_isomorphic(const std::string& a_path, const std::string& b_path) {
  const auto mu = isomorphic_set(load_single(a_path), load_single(b_path));
  if (!mu) {
    std::cout << "not isomorphic\n";
    return kFalse;
  }
  std::cout << "isomorphic mu=[";
  for (std::size_t k = 0; k < mu->size(); ++k) std::cout << (k ? "," : "") << mu->image()[k];
  std::cout << "]\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitioned-matrix products and set-theoretic Yang-Baxter solutions"};
  app.require_subcommand(1);

  std::string op, a, b, out, flip, product, out_dir, jsonl;
  bool dedupe = false, allow_large = false, no_check = false;
  std::size_t n = 0;
  unsigned threads = 0;

  auto* product_cmd = app.add_subcommand("product", "Kronecker, Hadamard, Tracy-Singh or Khatri-Rao product of CSV matrices");
  product_cmd->add_option("op", op, "Product kind")
      ->required()
      ->check(CLI::IsMember({"kronecker", "hadamard", "tracy-singh", "khatri-rao"}));
  product_cmd->add_option("a", a, "Left matrix (CSV)")->required();
  product_cmd->add_option("b", b, "Right matrix (CSV)")->required();
  product_cmd->add_option("-o,--out", out, "Output CSV (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "Report the axioms a solution satisfies");
  check_cmd->add_option("solution", a, "Solution (JSON)")->required();

  auto* repmat_cmd = app.add_subcommand("repmat", "Representing matrix of a solution");
  repmat_cmd->add_option("solution", a, "Solution (JSON)")->required();
  repmat_cmd->add_option("--flip", flip, "Compose with the flip on the left or right")
      ->check(CLI::IsMember({"left", "right"}));
  repmat_cmd->add_option("-o,--out", out, "Output CSV (default stdout)");

  auto* dp_cmd = app.add_subcommand("direct-product", "Direct product of two solutions");
  dp_cmd->add_option("x", a, "First factor (JSON)")->required();
  dp_cmd->add_option("y", b, "Second factor (JSON)")->required();
  dp_cmd->add_option("-o,--out", out, "Output JSON (default stdout)");

  auto* verify_cmd = app.add_subcommand(
      "verify-theorem-a", "Check that the matrix of the direct product equals the Tracy-Singh product of the factor matrices");
  verify_cmd->add_option("x", a, "First factor: .json, .jsonl or a directory of .json")->required();
  verify_cmd->add_option("y", b, "Second factor: .json, .jsonl or a directory of .json")->required();
  verify_cmd->add_option("--product", product, "Compare against this solution instead of computing the direct product");
  verify_cmd->add_flag("--no-check", no_check, "Skip the axiom checks on the inputs");

  auto* enum_cmd = app.add_subcommand("enumerate", "All non-degenerate involutive solutions of size n");
  enum_cmd->add_option("n", n, "Size of the set")->required();
  enum_cmd->add_flag("--dedupe", dedupe, "Keep one representative per isomorphism class");
  enum_cmd->add_option("--out-dir", out_dir, "Write one JSON file per solution");
  enum_cmd->add_option("--jsonl", jsonl, "Write all solutions as JSON lines");
  enum_cmd->add_flag("--allow-large", allow_large, "Raise the size cap to 5");
  enum_cmd->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  auto* iso_cmd = app.add_subcommand("isomorphic", "Search for a relabeling between two solutions");
  iso_cmd->add_option("a", a, "First solution (JSON)")->required();
  iso_cmd->add_option("b", b, "Second solution (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*product_cmd) return cmd_product(op, a, b, out);
    if (*check_cmd) return cmd_check(a);
    if (*repmat_cmd) return cmd_repmat(a, flip, out);
    if (*dp_cmd) return cmd_direct_product(a, b, out);
    if (*verify_cmd) return cmd_verify_theorem_a(a, b, product, no_check);
    if (*enum_cmd) return cmd_enumerate(n, dedupe, out_dir, jsonl, allow_large, threads);
    if (*iso_cmd) return cmd_isomorphic(a, b);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kFalse;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return kDimension;
  } catch (const IndexError& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return kDimension;
  } catch (const SingularMatrixError& e) {
    std::cerr << "singular matrix: " << e.what() << '\n';
    return kDimension;
  } catch (const ResourceLimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kDimension;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
