#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ybekit/set_solution.hpp"

namespace ybekit {

/// JSON form {"n": 2, "sigma": [[1,2],[1,2]], "gamma": [[1,2],[1,2]]};
/// 1-based images, sigma[i-1] is the table of sigma_i. Single line, keys in
/// the order n, sigma, gamma.
std::string to_json(const SetSolution& s);
/// Throws ParseError on malformed JSON or a shape/range violation.
SetSolution solution_from_json(const std::string& text);

SetSolution read_solution(const std::filesystem::path& path);
void write_solution(const std::filesystem::path& path, const SetSolution& s);

/// One solution per line. Blank lines are skipped.
std::vector<SetSolution> read_solutions_jsonl(std::istream& in);
void write_solutions_jsonl(std::ostream& out, const std::vector<SetSolution>& sols);

/// A .json file holds one solution, a .jsonl file a stream, and a directory
/// every *.json inside it in filename order.
std::vector<SetSolution> load_solutions(const std::filesystem::path& path);

}  // namespace ybekit
