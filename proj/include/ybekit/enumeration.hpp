#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ybekit/set_solution.hpp"

namespace ybekit {

struct EnumerationConfig {
  std::size_t n = 1;
  /// Collapse isomorphic solutions to their lexicographically least member.
  bool dedupe = false;
  /// Maximum number of solutions; exceeding it throws ResourceLimitError.
  std::optional<std::size_t> limit;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// All non-degenerate, involutive, braided solutions on {1..n}, sorted by
/// their flattened sigma tables.
///
/// Sigma is assigned one element at a time and gamma is derived as
/// gamma_j(i) = sigma^-1_{sigma_i(j)}(i). A partial assignment is abandoned
/// as soon as an axiom instance that only involves assigned tables fails;
/// every complete assignment is then re-checked with the full axiom checks.
/// The output does not depend on the thread count.
std::vector<SetSolution> enumerate_solutions(const EnumerationConfig& cfg);

struct DedupeResult {
  std::vector<SetSolution> representatives;
  /// class_sizes[k] is the number of inputs isomorphic to representatives[k].
  std::vector<std::size_t> class_sizes;
};

/// Groups `sols` (all of one size) by isomorphic_set. Representatives are
/// the lexicographically least member of each class, in sorted order.
DedupeResult dedupe_up_to_iso(std::vector<SetSolution> sols);

}  // namespace ybekit
