#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ybekit/errors.hpp"
#include "ybekit/solution_io.hpp"

using namespace ybekit;
using namespace ybekit::testing;

TEST_CASE("json form") {
  CHECK(to_json(trivial2()) == R"({"n":2,"sigma":[[1,2],[1,2]],"gamma":[[1,2],[1,2]]})");
  CHECK(to_json(permutation2()) == R"({"n":2,"sigma":[[2,1],[2,1]],"gamma":[[2,1],[2,1]]})");
  CHECK(solution_from_json(R"({"n": 2, "sigma": [[1,2],[1,2]], "gamma": [[1,2],[1,2]]})") == trivial2());
}

TEST_CASE("json round trip keeps non-bijective tables") {
  const SetSolution s({MapTable({1, 1, 3}), MapTable({3, 2, 1}), MapTable({2, 3, 1})},
                      {MapTable({1, 2, 3}), MapTable({2, 2, 2}), MapTable({3, 1, 2})});
  CHECK(solution_from_json(to_json(s)) == s);
}

TEST_CASE("json errors") {
  CHECK_THROWS_AS(solution_from_json("{"), ParseError);
  CHECK_THROWS_AS(solution_from_json(R"({"n":2,"sigma":[[1,2],[1,2]]})"), ParseError);
  CHECK_THROWS_AS(solution_from_json(R"({"n":0,"sigma":[],"gamma":[]})"), ParseError);
  CHECK_THROWS_AS(solution_from_json(R"({"n":2,"sigma":[[1,2]],"gamma":[[1,2],[1,2]]})"), ParseError);
  CHECK_THROWS_AS(solution_from_json(R"({"n":2,"sigma":[[1,3],[1,2]],"gamma":[[1,2],[1,2]]})"), ParseError);
  CHECK_THROWS_AS(solution_from_json(R"({"n":2,"sigma":[[1],[1,2]],"gamma":[[1,2],[1,2]]})"), ParseError);
  CHECK_THROWS_AS(solution_from_json(R"({"n":2,"sigma":[[1,"a"],[1,2]],"gamma":[[1,2],[1,2]]})"), ParseError);
  CHECK_THROWS_AS(solution_from_json("[1,2]"), ParseError);
}

TEST_CASE("jsonl stream") {
  std::stringstream io;
  write_solutions_jsonl(io, {trivial2(), permutation2()});
  io.seekg(0);
  const auto back = read_solutions_jsonl(io);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == trivial2());
  CHECK(back[1] == permutation2());

  std::istringstream blank("\n" + to_json(trivial2()) + "\n\n");
  CHECK(read_solutions_jsonl(blank).size() == 1);
}

TEST_CASE("files and directories") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ybekit_solution_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  write_solution(dir / "b.json", permutation2());
  write_solution(dir / "a.json", trivial2());
  std::ofstream(dir / "notes.txt") << "ignored";

  CHECK(read_solution(dir / "a.json") == trivial2());
  const auto all = load_solutions(dir);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == trivial2());
  CHECK(all[1] == permutation2());

  {
    std::ofstream out(dir / "both.jsonl");
    write_solutions_jsonl(out, {permutation2(), trivial2()});
  }
  CHECK(load_solutions(dir / "both.jsonl") == std::vector<SetSolution>{permutation2(), trivial2()});
  CHECK(load_solutions(dir / "b.json") == std::vector<SetSolution>{permutation2()});
  CHECK_THROWS_AS(read_solution(dir / "missing.json"), ParseError);

  fs::remove_all(dir);
}
