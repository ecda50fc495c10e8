#include "ybekit/set_solution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

bool bijective(const std::vector<std::size_t>& image) {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t v : image) {
    if (v < 1 || v > image.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::vector<std::size_t> iota_image(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{1});
  return image;
}

void require_index(const SetSolution& s, std::size_t i, const char* what) {
  if (i < 1 || i > s.size()) {
    throw IndexError(std::string(what) + " index " + std::to_string(i) + " outside {1.." + std::to_string(s.size()) +
                     "}");
  }
}

}  // namespace

// ---------------------------------------------------------------- MapTable

MapTable::MapTable(std::vector<std::size_t> image) : image_(std::move(image)) {
  for (std::size_t v : image_) {
    if (v < 1 || v > image_.size()) {
      throw IndexError("map image " + std::to_string(v) + " outside {1.." + std::to_string(image_.size()) + "}");
    }
  }
}

MapTable MapTable::identity(std::size_t n) { return MapTable(iota_image(n)); }

bool MapTable::is_bijection() const { return bijective(image_); }

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  if (!bijective(image_)) throw PreconditionError("not a bijection of {1.." + std::to_string(image_.size()) + "}");
}

Permutation Permutation::identity(std::size_t n) { return Permutation(iota_image(n)); }

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t k = 1; k <= image_.size(); ++k) inv[image_[k - 1] - 1] = k;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 1; k <= image_.size(); ++k)
    if (image_[k - 1] != k) return false;
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionError("composing permutations of different degree");
  std::vector<std::size_t> image(q.size());
  for (std::size_t k = 1; k <= q.size(); ++k) image[k - 1] = p(q(k));
  return Permutation(std::move(image));
}

// ------------------------------------------------------------- SetSolution

SetSolution::SetSolution(std::vector<MapTable> sigma, std::vector<MapTable> gamma)
    : sigma_(std::move(sigma)), gamma_(std::move(gamma)) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw DimensionError("solution on an empty set");
  if (gamma_.size() != n) throw DimensionError("sigma and gamma must both have n tables");
  for (const auto& t : sigma_)
    if (t.size() != n) throw DimensionError("sigma table of wrong size");
  for (const auto& t : gamma_)
    if (t.size() != n) throw DimensionError("gamma table of wrong size");
}

SetSolution SetSolution::trivial(std::size_t n) {
  return SetSolution(std::vector<MapTable>(n, MapTable::identity(n)), std::vector<MapTable>(n, MapTable::identity(n)));
}

SetSolution SetSolution::from_sigma(const std::vector<Permutation>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<Permutation> inv;
  inv.reserve(n);
  for (const auto& p : sigma) {
    if (p.size() != n) throw DimensionError("sigma table of wrong size");
    inv.push_back(p.inverse());
  }
  std::vector<MapTable> sig, gam;
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::size_t> g(n);
    for (std::size_t i = 1; i <= n; ++i) g[i - 1] = inv[sigma[i - 1](j) - 1](i);
    gam.emplace_back(std::move(g));
    sig.push_back(sigma[j - 1].as_map());
  }
  return SetSolution(std::move(sig), std::move(gam));
}

Permutation SetSolution::sigma_permutation(std::size_t i) const { return Permutation(sigma(i).image()); }

std::pair<std::size_t, std::size_t> apply_r(const SetSolution& s, std::size_t i, std::size_t j) {
  require_index(s, i, "first");
  require_index(s, j, "second");
  return {s.sigma(i)(j), s.gamma(j)(i)};
}

std::string to_string(const Witness& w) {
  std::string out = w.label + "(";
  for (std::size_t k = 0; k < w.tuple.size(); ++k) out += (k ? "," : "") + std::to_string(w.tuple[k]);
  return out + ")";
}

// ------------------------------------------------------------------ checks

CheckResult is_nondegenerate(const SetSolution& s) {
  for (std::size_t x = 1; x <= s.size(); ++x) {
    if (!s.sigma(x).is_bijection()) return CheckResult::fail({"sigma", {x}});
    if (!s.gamma(x).is_bijection()) return CheckResult::fail({"gamma", {x}});
  }
  return CheckResult::pass();
}

CheckResult is_involutive(const SetSolution& s) {
  const std::size_t n = s.size();
  CheckResult direct = CheckResult::pass();
  CheckResult pointwise = CheckResult::pass();
  for (std::size_t x = 1; x <= n && direct.holds; ++x) {
    for (std::size_t y = 1; y <= n; ++y) {
      const auto [u, v] = apply_r(s, x, y);
      if (apply_r(s, u, v) != std::pair{x, y}) {
        direct = CheckResult::fail({"involutive", {x, y}});
        break;
      }
    }
  }
  for (std::size_t x = 1; x <= n && pointwise.holds; ++x) {
    for (std::size_t y = 1; y <= n; ++y) {
      const std::size_t sx_y = s.sigma(x)(y);
      const std::size_t gy_x = s.gamma(y)(x);
      if (s.sigma(sx_y)(gy_x) != x || s.gamma(gy_x)(sx_y) != y) {
        pointwise = CheckResult::fail({"involutive", {x, y}});
        break;
      }
    }
  }
  if (direct.holds != pointwise.holds || direct.witness != pointwise.witness) {
    throw std::logic_error("involutivity: direct and pointwise evaluations disagree");
  }
  return direct;
}

CheckResult is_braided(const SetSolution& s) {
  const std::size_t n = s.size();
  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  auto r12 = [&](Triple t) {
    auto [a, b] = apply_r(s, std::get<0>(t), std::get<1>(t));
    return Triple{a, b, std::get<2>(t)};
  };
  auto r23 = [&](Triple t) {
    auto [b, c] = apply_r(s, std::get<1>(t), std::get<2>(t));
    return Triple{std::get<0>(t), b, c};
  };
  auto sigma = [&](std::size_t x, std::size_t y) { return s.sigma(x)(y); };
  auto gamma = [&](std::size_t y, std::size_t x) { return s.gamma(y)(x); };

  std::optional<Witness> direct, componentwise;
  for (std::size_t x = 1; x <= n && !direct; ++x)
    for (std::size_t y = 1; y <= n && !direct; ++y)
      for (std::size_t z = 1; z <= n && !direct; ++z) {
        const Triple t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) direct = Witness{"braid", {x, y, z}};
      }
  for (std::size_t x = 1; x <= n && !componentwise; ++x)
    for (std::size_t y = 1; y <= n && !componentwise; ++y)
      for (std::size_t z = 1; z <= n && !componentwise; ++z) {
        const std::size_t sx_y = sigma(x, y);
        const std::size_t gy_x = gamma(y, x);
        const bool first = sigma(x, sigma(y, z)) == sigma(sx_y, sigma(gy_x, z));
        // The third component at (x,y,z) is the gamma identity for the pair (y,z) applied to x.
        const bool third = gamma(z, gamma(y, x)) == gamma(gamma(z, y), gamma(sigma(y, z), x));
        const bool middle = gamma(sigma(gy_x, z), sx_y) == sigma(gamma(sigma(y, z), x), gamma(z, y));
        if (!(first && middle && third)) componentwise = Witness{"braid", {x, y, z}};
      }
  if (direct != componentwise) {
    throw std::logic_error("braid relation: direct and componentwise evaluations disagree");
  }
  return direct ? CheckResult::fail(*direct) : CheckResult::pass();
}

CheckResult is_square_free(const SetSolution& s) {
  for (std::size_t x = 1; x <= s.size(); ++x) {
    if (apply_r(s, x, x) != std::pair{x, x}) return CheckResult::fail({"square_free", {x}});
  }
  return CheckResult::pass();
}

CheckResult is_trivial(const SetSolution& s) {
  const MapTable id = MapTable::identity(s.size());
  for (std::size_t x = 1; x <= s.size(); ++x) {
    if (s.sigma(x) != id) return CheckResult::fail({"sigma", {x}});
    if (s.gamma(x) != id) return CheckResult::fail({"gamma", {x}});
  }
  return CheckResult::pass();
}

CheckReport check(const SetSolution& s) {
  return {is_nondegenerate(s), is_involutive(s), is_braided(s), is_square_free(s), is_trivial(s)};
}

CheckResult check_sigma_inverse_identity(const SetSolution& s) {
  if (!is_nondegenerate(s) || !is_involutive(s)) {
    throw PreconditionError("sigma-inverse identity needs a non-degenerate involutive solution");
  }
  const std::size_t n = s.size();
  std::vector<Permutation> inv;
  for (std::size_t i = 1; i <= n; ++i) inv.push_back(s.sigma_permutation(i).inverse());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (apply_r(s, i, inv[i - 1](j)) != std::pair{j, inv[j - 1](i)})
        return CheckResult::fail({"sigma_inverse", {i, j}});
  return CheckResult::pass();
}

// ---------------------------------------------------------- direct product

std::size_t pair_to_index(std::size_t i, std::size_t k, std::size_t m) {
  if (m == 0 || i < 1 || k < 1 || k > m) {
    throw IndexError("pair_to_index(" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(m) +
                     ") out of range");
  }
  return (i - 1) * m + k;
}

std::pair<std::size_t, std::size_t> index_to_pair(std::size_t t, std::size_t m) {
  if (m == 0 || t < 1) throw IndexError("index_to_pair(" + std::to_string(t) + "," + std::to_string(m) + ") out of range");
  const std::size_t hat = (t + m - 1) / m;
  const std::size_t residue = t % m;
  return {hat, residue == 0 ? m : residue};
}

SetSolution direct_product(const SetSolution& sx, const SetSolution& sy) {
  const std::size_t n = sx.size();
  const std::size_t m = sy.size();
  const std::size_t nm = n * m;
  std::vector<MapTable> g, f;
  g.reserve(nm);
  f.reserve(nm);
  // g_i^k = sigma_i x alpha_k, f_j^l = gamma_j x beta_l, both indexed by T_i^k.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= m; ++k) {
      std::vector<std::size_t> gi(nm), fi(nm);
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t l = 1; l <= m; ++l) {
          const std::size_t target = pair_to_index(j, l, m);
          gi[target - 1] = pair_to_index(sx.sigma(i)(j), sy.sigma(k)(l), m);
          fi[target - 1] = pair_to_index(sx.gamma(i)(j), sy.gamma(k)(l), m);
        }
      }
      g.emplace_back(std::move(gi));
      f.emplace_back(std::move(fi));
    }
  }
  return SetSolution(std::move(g), std::move(f));
}

SetSolution relabel(const SetSolution& s, const Permutation& mu) {
  const std::size_t n = s.size();
  if (mu.size() != n) throw DimensionError("relabel: permutation degree differs from solution size");
  std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(n)), gam(n, std::vector<std::size_t>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const auto [u, v] = apply_r(s, i, j);
      sig[mu(i) - 1][mu(j) - 1] = mu(u);
      gam[mu(j) - 1][mu(i) - 1] = mu(v);
    }
  }
  std::vector<MapTable> sigma, gamma;
  for (auto& t : sig) sigma.emplace_back(std::move(t));
  for (auto& t : gam) gamma.emplace_back(std::move(t));
  return SetSolution(std::move(sigma), std::move(gamma));
}

std::optional<Permutation> isomorphic_set(const SetSolution& sa, const SetSolution& sb) {
  if (sa.size() != sb.size()) throw DimensionError("isomorphic_set: solutions of different size");
  const std::size_t n = sa.size();
  std::vector<std::size_t> mu = iota_image(n);
  do {
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const auto [u, v] = apply_r(sa, i, j);
        if (apply_r(sb, mu[i - 1], mu[j - 1]) != std::pair{mu[u - 1], mu[v - 1]}) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return Permutation(mu);
  } while (std::next_permutation(mu.begin(), mu.end()));
  return std::nullopt;
}

}  // namespace ybekit
