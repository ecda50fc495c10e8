#include "ybekit/solution_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

using nlohmann::ordered_json;

std::vector<MapTable> parse_tables(const ordered_json& arr, std::size_t n, const char* key) {
  if (!arr.is_array() || arr.size() != n) {
    throw ParseError(std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " tables");
  }
  std::vector<MapTable> tables;
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError(std::string("each \"") + key + "\" table must have " + std::to_string(n) + " entries");
    }
    std::vector<std::size_t> image;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > static_cast<long long>(n)) {
        throw ParseError(std::string("\"") + key + "\" entry outside {1.." + std::to_string(n) + "}");
      }
      image.push_back(v.get<std::size_t>());
    }
    tables.emplace_back(std::move(image));
  }
  return tables;
}

ordered_json tables_json(const std::vector<MapTable>& tables) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : tables) arr.push_back(t.image());
  return arr;
}

}  // namespace

std::string to_json(const SetSolution& s) {
  ordered_json j;
  j["n"] = s.size();
  j["sigma"] = tables_json(s.sigma_tables());
  j["gamma"] = tables_json(s.gamma_tables());
  return j.dump();
}

SetSolution solution_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("sigma") || !j.contains("gamma")) {
    throw ParseError("solution JSON needs keys \"n\", \"sigma\", \"gamma\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw ParseError("\"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  return SetSolution(parse_tables(j["sigma"], n, "sigma"), parse_tables(j["gamma"], n, "gamma"));
}

SetSolution read_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return solution_from_json(buf.str());
}

void write_solution(const std::filesystem::path& path, const SetSolution& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(s) << '\n';
}

std::vector<SetSolution> read_solutions_jsonl(std::istream& in) {
  std::vector<SetSolution> sols;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    sols.push_back(solution_from_json(line));
  }
  return sols;
}

void write_solutions_jsonl(std::ostream& out, const std::vector<SetSolution>& sols) {
  for (const auto& s : sols) out << to_json(s) << '\n';
}

std::vector<SetSolution> load_solutions(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<SetSolution> sols;
    for (const auto& f : files) sols.push_back(read_solution(f));
    return sols;
  }
  if (path.extension() == ".jsonl") {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return read_solutions_jsonl(in);
  }
  return {read_solution(path)};
}

}  // namespace ybekit
