// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "ybekit/enumeration.hpp"
#include "ybekit/ybe_linear.hpp"

using namespace ybekit;
using namespace ybekit::testing;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::vector<SetSolution> solutions_of(std::initializer_list<std::size_t> sizes) {
  std::vector<SetSolution> all;
  for (std::size_t n : sizes) {
    auto part = enumerate_solutions({.n = n});
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

Matrix rep(const SetSolution& s) { return representing_matrix(s).matrix.matrix(); }

Verdict direct_product_sweep() {
  const auto start = std::chrono::steady_clock::now();
  const auto sols = solutions_of({2, 3});
  std::size_t pairs = 0, ok = 0;
  std::string first_bad;
  for (const SetSolution& x : sols)
    for (const SetSolution& y : sols) {
      ++pairs;
      const ProductComparison r = verify_theorem_a(x, y);
      if (r.holds) {
        ++ok;
      } else if (first_bad.empty()) {
        std::ostringstream os;
        os << ", first failure at (" << r.mismatch->row << "," << r.mismatch->col << ")";
        first_bad = os.str();
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << ok << "/" << pairs << " pairs equal, " << secs << " s" << first_bad;
  return {pairs == 196 && ok == pairs && secs < 60.0, os.str()};
}

Verdict k23() {
  return {commutation_matrix(2, 3) == printed_k23(), "commutation_matrix(2,3) vs printed 6x6"};
}

Verdict block_24() {
  const PartitionedMatrix cd = tracy_singh(sqrt2_c(), example_d());
  return {block(cd, 2, 4) == sqrt2_block_24(), "block (2,4) of sqrt2*c [x] d, entries 0, +-3/2, +-2"};
}

Verdict two_element_matrices() {
  const bool c = rep(trivial2()) == trivial2_matrix();
  const bool d = rep(permutation2()) == permutation2_matrix();
  return {c && d, std::string("c ") + (c ? "matches" : "differs") + ", d " + (d ? "matches" : "differs")};
}

Verdict product_table() {
  const SetSolution z = direct_product(trivial2(), permutation2());
  // T11 = 1, T12 = 2, T21 = 3, T22 = 4.
  using P = std::pair<std::size_t, std::size_t>;
  const std::vector<std::pair<P, P>> printed{{{1, 1}, {2, 2}}, {{1, 3}, {4, 2}}, {{1, 4}, {3, 2}},
                                              {{2, 3}, {4, 1}}, {{2, 4}, {3, 1}}, {{3, 3}, {4, 4}}};
  std::size_t ok = 0;
  for (const auto& [arg, value] : printed) ok += apply_r(z, arg.first, arg.second) == value;
  return {ok == printed.size(), std::to_string(ok) + "/6 t-values"};
}

Verdict similarity_identities() {
  Rng rng(1005);
  std::size_t cases = 0, failures = 0;
  std::string first;
  for (std::size_t n : {2, 3})
    for (std::size_t m : {2, 3}) {
      const PropertyOutcome o = square_similarity(rng, n, m, 20);
      cases += o.cases;
      failures += o.failures;
      if (first.empty() && o.failures) first = ", first failure: " + o.first_failure;
    }
  return {cases == 80 && failures == 0, std::to_string(cases - failures) + "/" + std::to_string(cases) +
                                            " cases, (i), (ii), (iii) and the fixed P" + first};
}

Verdict product_rules() {
  Rng rng(1003);
  const std::size_t cases = 60;
  const std::vector<std::pair<const char*, std::function<PropertyOutcome(Rng&, std::size_t)>>> rules{
      {"associativity", associativity}, {"distributivity", distributivity}, {"mixed product", mixed_product},
      {"scalar", scalar_pullout},       {"inverse", inverse_rule},          {"transpose", transpose_rule},
      {"identity", identity_rule}};
  bool pass = true;
  std::ostringstream os;
  for (const auto& [name, rule] : rules) {
    const PropertyOutcome o = rule(rng, cases);
    pass &= o.ok() && o.cases >= 50;
    os << name << " " << (o.cases - o.failures) << "/" << o.cases << "; ";
  }
  const PropertyOutcome witness = non_commutativity_witness(rng, 20);
  pass &= witness.ok();
  os << "non-commuting pair " << (witness.ok() ? "found" : "not found");
  return {pass, os.str()};
}

Verdict conjugation() {
  const Matrix cycle = permutation_matrix(std::vector<std::size_t>{2, 3, 4, 1});
  const Matrix involution = permutation_matrix(std::vector<std::size_t>{4, 3, 2, 1});
  bool pass = true;
  for (const Matrix& c : {trivial2_matrix(), permutation2_matrix()}) {
    pass &= !conjugate_check(c, cycle, 2);
    pass &= !conjugate_check(c, inverse(cycle), 2);
    pass &= conjugate_check(c, involution, 2);
  }
  return {pass, "4-cycle breaks, (1,4)(2,3) preserves, for c and d"};
}

Verdict dual_oracles() {
  std::size_t matrices = 0, disagreements = 0;
  auto compare = [&](const Matrix& m, std::size_t n) {
    ++matrices;
    disagreements += ybe_check_matrix(m, n) != ybe_check_scalar(m, n);
  };
  const Matrix cycle = permutation_matrix(std::vector<std::size_t>{2, 3, 4, 1});
  for (const SetSolution& s : solutions_of({1, 2, 3})) {
    const Matrix c = rep(s);
    const std::size_t n = s.size();
    compare(c, n);
    compare(Scalar(2) * c, n);
    compare(inverse(c), n);
    compare(flip_matrix(n) * c * flip_matrix(n), n);
    if (n == 2) compare(inverse(cycle) * c * cycle, n);
  }
  compare(sqrt2_c().matrix(), 2);
  compare(example_d().matrix(), 2);
  compare(tracy_singh(sqrt2_c(), example_d()).matrix(), 4);
  Rng rng(1009);
  for (int k = 0; k < 20; ++k) compare(random_matrix(rng, 4, 4), 2);

  std::size_t enum_mismatch = 0;
  for (std::size_t n = 1; n <= 3; ++n) enum_mismatch += enumerate_solutions({.n = n}) != enumerate_by_bijection(n);

  std::size_t blocks = 0, position_mismatch = 0;
  for (const SetSolution& s : solutions_of({1, 2, 3, 4})) {
    const Matrix c = rep(s);
    for (std::size_t i = 1; i <= s.size(); ++i)
      for (std::size_t j = 1; j <= s.size(); ++j) {
        ++blocks;
        position_mismatch += block_nonzero_position(s, i, j) != scan_block(c, s.size(), i, j);
      }
  }
  const auto sols = solutions_of({2, 3});
  for (const SetSolution& x : sols)
    for (const SetSolution& y : sols) {
      const std::size_t nm = x.size() * y.size();
      const Matrix e = rep(direct_product(x, y));
      for (std::size_t i = 1; i <= nm; ++i)
        for (std::size_t j = 1; j <= nm; ++j) {
          ++blocks;
          position_mismatch += direct_rep_position(x, y, i, j) != scan_block(e, nm, i, j);
        }
    }

  std::ostringstream os;
  os << matrices - disagreements << "/" << matrices << " matrix/scalar agreements; enumeration vs oracle "
     << (enum_mismatch ? "differs" : "equal") << " for n<=3; " << blocks - position_mismatch << "/" << blocks
     << " block positions match scans";
  return {disagreements == 0 && enum_mismatch == 0 && position_mismatch == 0, os.str()};
}

Verdict quantum_form() {
  std::size_t checked = 0, ok = 0;
  for (const SetSolution& s : solutions_of({1, 2, 3})) {
    const Matrix c = rep(s);
    for (FlipSide side : {FlipSide::left, FlipSide::right}) {
      ++checked;
      ok += qybe_check(compose_flip(c, s.size(), side), s.size());
    }
  }
  return {ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " of tau*c and c*tau"};
}

Verdict closing_product() {
  const Matrix cd = tracy_singh(sqrt2_c(), example_d()).matrix();
  return {ybe_check_scalar(cd, 4), "scalar braid check on sqrt2*c [x] d, order 16"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"direct-product matrix equals Tracy-Singh product, all pairs n,m in {2,3}", direct_product_sweep},
      {"K_23 reproduction", k23},
      {"Tracy-Singh block (2,4) of the 16x16 example", block_24},
      {"representing matrices of the two-element solutions", two_element_matrices},
      {"direct-product table of the two-element solutions", product_table},
      {"square-block commutation identities, 20 cases per size", similarity_identities},
      {"Tracy-Singh product rules, randomized", product_rules},
      {"conjugation by 4-cycle vs (1,4)(2,3)", conjugation},
      {"dual-oracle agreement", dual_oracles},
      {"quantum form for tau*c and c*tau, n<=3", quantum_form},
      {"braid check on the Tracy-Singh product of two R-matrices", closing_product},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v{false, ""};
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %2zu %s  %s: %s\n", k + 1, v.pass ? "PASS" : "FAIL", criteria[k].first, v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
