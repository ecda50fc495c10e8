#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ybekit/enumeration.hpp"
#include "ybekit/errors.hpp"

using namespace ybekit;
using namespace ybekit::testing;

TEST_CASE("small counts") {
  CHECK(enumerate_solutions({.n = 1}) == std::vector<SetSolution>{SetSolution::trivial(1)});
  CHECK(enumerate_solutions({.n = 2}) == std::vector<SetSolution>{trivial2(), permutation2()});
  CHECK(enumerate_solutions({.n = 3}).size() == 12);
}

TEST_CASE("sigma-level search equals the bijection-level oracle") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(enumerate_solutions({.n = n}) == enumerate_by_bijection(n));
}

TEST_CASE("pruned search equals the exhaustive sigma search") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(enumerate_solutions({.n = n}) == enumerate_sigma_exhaustive(n));
}

TEST_CASE("pruned search equals the exhaustive sigma search at n = 4" * doctest::timeout(120)) {
  const auto pruned = enumerate_solutions({.n = 4});
  CHECK(pruned.size() == 168);
  CHECK(pruned == enumerate_sigma_exhaustive(4));
}

TEST_CASE("output is sorted, valid and independent of thread count") {
  const auto one = enumerate_solutions({.n = 4, .threads = 1});
  CHECK(std::is_sorted(one.begin(), one.end()));
  for (const SetSolution& s : one) CHECK(check(s).is_valid_solution());
  CHECK(enumerate_solutions({.n = 4, .threads = 3}) == one);
  CHECK(enumerate_solutions({.n = 3, .threads = 8}) == enumerate_solutions({.n = 3, .threads = 1}));
}

TEST_CASE("limit") {
  CHECK_THROWS_AS(enumerate_solutions({.n = 3, .limit = 11}), ResourceLimitError);
  CHECK(enumerate_solutions({.n = 3, .limit = 12}).size() == 12);
  CHECK_THROWS_AS(enumerate_solutions({.n = 0}), PreconditionError);
}

TEST_CASE("dedupe") {
  const DedupeResult two = dedupe_up_to_iso(enumerate_solutions({.n = 2}));
  CHECK(two.representatives == std::vector<SetSolution>{trivial2(), permutation2()});
  CHECK(two.class_sizes == std::vector<std::size_t>{1, 1});

  CHECK(dedupe_up_to_iso({}).representatives.empty());

  const auto three = enumerate_solutions({.n = 3});
  const SetSolution copy = relabel(three.back(), Permutation({3, 1, 2}));
  std::vector<SetSolution> with_copy{three.back(), copy};
  const DedupeResult d = dedupe_up_to_iso(with_copy);
  REQUIRE(d.representatives.size() == 1);
  CHECK(d.representatives.front() == std::min(three.back(), copy));
  CHECK(d.class_sizes == std::vector<std::size_t>{2});

  // Every class is closed under relabeling and classes are pairwise non-isomorphic.
  const DedupeResult all = dedupe_up_to_iso(three);
  std::size_t total = 0;
  for (std::size_t s : all.class_sizes) total += s;
  CHECK(total == three.size());
  for (std::size_t a = 0; a < all.representatives.size(); ++a)
    for (std::size_t b = a + 1; b < all.representatives.size(); ++b)
      CHECK_FALSE(isomorphic_set(all.representatives[a], all.representatives[b]).has_value());
  for (const SetSolution& s : three) {
    std::size_t matches = 0;
    for (const SetSolution& rep : all.representatives) matches += isomorphic_set(rep, s).has_value();
    CHECK(matches == 1);
  }
  CHECK(enumerate_solutions({.n = 3, .dedupe = true}) == all.representatives);
  CHECK(all.representatives.size() == 5);
  CHECK(dedupe_up_to_iso(enumerate_solutions({.n = 4})).representatives.size() == 23);
}
