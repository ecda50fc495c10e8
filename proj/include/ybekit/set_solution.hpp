#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybekit {

/// A self-map of {1..n} in one-line notation: image[k-1] is the image of k.
/// Bijectivity is not assumed.
class MapTable {
 public:
  /// Throws IndexError if an image value is outside {1..n}.
  explicit MapTable(std::vector<std::size_t> image);
  static MapTable identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t k) const { return image_[k - 1]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  bool is_bijection() const;

  friend auto operator<=>(const MapTable&, const MapTable&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// A bijection of {1..n}, 1-based one-line notation.
class Permutation {
 public:
  /// Throws PreconditionError unless `image` is a bijection of {1..n}.
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t k) const { return image_[k - 1]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  Permutation inverse() const;
  bool is_identity() const;
  MapTable as_map() const { return MapTable(image_); }

  /// (p * q)(k) = p(q(k)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Finite set-theoretic map r(i,j) = (sigma_i(j), gamma_j(i)) on {1..n}^2.
///
/// Both tables are stored, so degenerate or non-involutive candidates can be
/// represented and rejected by the checks below.
class SetSolution {
 public:
  /// Throws DimensionError unless there are n sigma and n gamma tables of size n.
  SetSolution(std::vector<MapTable> sigma, std::vector<MapTable> gamma);
  static SetSolution trivial(std::size_t n);
  /// The involutive map determined by sigma alone:
  /// gamma_j(i) = sigma^-1_{sigma_i(j)}(i).
  static SetSolution from_sigma(const std::vector<Permutation>& sigma);

  std::size_t size() const noexcept { return sigma_.size(); }
  const MapTable& sigma(std::size_t i) const { return sigma_[i - 1]; }
  const MapTable& gamma(std::size_t j) const { return gamma_[j - 1]; }
  const std::vector<MapTable>& sigma_tables() const noexcept { return sigma_; }
  const std::vector<MapTable>& gamma_tables() const noexcept { return gamma_; }

  /// Throws PreconditionError if sigma_i is not a bijection.
  Permutation sigma_permutation(std::size_t i) const;

  friend auto operator<=>(const SetSolution&, const SetSolution&) = default;

 private:
  std::vector<MapTable> sigma_;
  std::vector<MapTable> gamma_;
};

/// r(i,j) = (sigma_i(j), gamma_j(i)). Throws IndexError outside {1..n}.
std::pair<std::size_t, std::size_t> apply_r(const SetSolution& s, std::size_t i, std::size_t j);

/// First failing case of a check, e.g. {"sigma", {2}} for a non-bijective
/// sigma_2, or {"braid", {1,2,1}} for a triple.
struct Witness {
  std::string label;
  std::vector<std::size_t> tuple;

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string to_string(const Witness& w);

/// A boolean verdict; `witness` is present exactly when `holds` is false.
struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(Witness w) { return {false, std::move(w)}; }
};

struct CheckReport {
  CheckResult nondegenerate;
  CheckResult involutive;
  CheckResult braided;
  CheckResult square_free;
  CheckResult trivial;

  /// Non-degenerate, involutive and braided.
  bool is_valid_solution() const { return nondegenerate.holds && involutive.holds && braided.holds; }
};

/// Every sigma_i and gamma_j is a bijection. Witness: "sigma"/"gamma" + index.
CheckResult is_nondegenerate(const SetSolution& s);

/// r o r = id, evaluated directly and through the pointwise identities
///   sigma_{sigma_x(y)}(gamma_y(x)) = x,  gamma_{gamma_y(x)}(sigma_x(y)) = y.
/// The two evaluations must agree; a disagreement throws std::logic_error.
/// Witness: "involutive" + (x, y).
CheckResult is_involutive(const SetSolution& s);

/// r12 r23 r12 = r23 r12 r23 on X^3, evaluated directly and through the
/// three component identities
///   sigma_x sigma_y = sigma_{sigma_x(y)} sigma_{gamma_y(x)}
///   gamma_y gamma_x = gamma_{gamma_y(x)} gamma_{sigma_x(y)}
///   gamma_{sigma_{gamma_y(x)}(z)}(sigma_x(y)) = sigma_{gamma_{sigma_y(z)}(x)}(gamma_z(y)).
/// Disagreement throws std::logic_error. Witness: "braid" + (x, y, z).
CheckResult is_braided(const SetSolution& s);

/// r(x,x) = (x,x) for every x. Witness: "square_free" + (x).
CheckResult is_square_free(const SetSolution& s);

/// All sigma and gamma tables are the identity. Witness: "sigma"/"gamma" + index.
CheckResult is_trivial(const SetSolution& s);

CheckReport check(const SetSolution& s);

/// r(i, sigma_i^-1(j)) = (j, sigma_j^-1(i)) for all i, j.
/// Throws PreconditionError unless s is non-degenerate and involutive.
CheckResult check_sigma_inverse_identity(const SetSolution& s);

/// Flattening of X x Y used throughout: T_i^k -> (i-1)m + k.
/// Throws IndexError unless i >= 1 and 1 <= k <= m.
std::size_t pair_to_index(std::size_t i, std::size_t k, std::size_t m);

/// Inverse of pair_to_index: (ceil(t/m), t mod m with 0 replaced by m).
std::pair<std::size_t, std::size_t> index_to_pair(std::size_t t, std::size_t m);

/// Solution on X x Y, flattened with pair_to_index, acting by
/// sigma_i x alpha_k and gamma_j x beta_l:
///   t(T_i^k, T_j^l) = (T_{sigma_i(j)}^{alpha_k(l)}, T_{gamma_j(i)}^{beta_l(k)}).
SetSolution direct_product(const SetSolution& sx, const SetSolution& sy);

/// The solution mu . s . (mu^-1 x mu^-1): s with its elements renamed by mu.
SetSolution relabel(const SetSolution& s, const Permutation& mu);

/// Exhaustive search over all n! bijections mu with
/// sb(mu(i), mu(j)) = (mu x mu)(sa(i, j)). This is isomorphism restricted to
/// basis permutations, not general linear isomorphism. Returns the
/// lexicographically least such mu. Throws DimensionError on a size mismatch.
std::optional<Permutation> isomorphic_set(const SetSolution& sa, const SetSolution& sb);

}  // namespace ybekit
