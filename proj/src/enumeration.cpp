#include "ybekit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

constexpr std::size_t kUnknown = 0;

/// Depth-first assignment of sigma_1, sigma_2, ... with pruning.
class SigmaSearch {
 public:
  SigmaSearch(std::size_t n, const std::vector<Permutation>& perms)
      : n_(n), perms_(perms), sigma_(n + 1), inv_(n + 1) {}

  template <typename Emit>
  void run_from(std::size_t first_choice, Emit&& emit, const std::atomic<bool>& stop) {
    assign(1, first_choice);
    if (consistent(1)) descend(2, emit, stop);
  }

 private:
  void assign(std::size_t x, std::size_t choice) {
    sigma_[x] = &perms_[choice].image();
    inv_[x] = perms_[choice].inverse().image();
    assigned_ = x;
  }

  template <typename Emit>
  void descend(std::size_t x, Emit& emit, const std::atomic<bool>& stop) {
    if (stop.load(std::memory_order_relaxed)) return;
    if (x > n_) {
      std::vector<Permutation> sigma;
      for (std::size_t i = 1; i <= n_; ++i) sigma.emplace_back(*sigma_[i]);
      SetSolution s = SetSolution::from_sigma(sigma);
      if (is_nondegenerate(s) && is_involutive(s) && is_braided(s)) emit(std::move(s));
      return;
    }
    for (std::size_t choice = 0; choice < perms_.size(); ++choice) {
      assign(x, choice);
      if (consistent(x)) descend(x + 1, emit, stop);
    }
    assigned_ = x - 1;
  }

  // sigma_x(y), or kUnknown while sigma_x is unassigned.
  std::size_t sig(std::size_t x, std::size_t y) const {
    return (x == kUnknown || y == kUnknown || x > assigned_) ? kUnknown : (*sigma_[x])[y - 1];
  }

  // gamma_y(x) = sigma^-1_{sigma_x(y)}(x), or kUnknown.
  std::size_t gam(std::size_t y, std::size_t x) const {
    const std::size_t s = sig(x, y);
    return (s == kUnknown || s > assigned_ || x == kUnknown) ? kUnknown : inv_[s][x - 1];
  }

  static bool clash(std::size_t a, std::size_t b) { return a != kUnknown && b != kUnknown && a != b; }

  // Every axiom instance whose value is already determined by sigma_1..sigma_x.
  // Instances that do not involve sigma_x were settled at an earlier depth,
  // but re-evaluating them is cheap at desk scale.
  bool consistent(std::size_t /*x*/) const {
    const std::size_t n = n_;
    for (std::size_t y = 1; y <= n; ++y) {
      std::vector<bool> seen(n + 1, false);
      for (std::size_t x = 1; x <= n; ++x) {
        const std::size_t g = gam(y, x);
        if (g == kUnknown) continue;
        if (seen[g]) return false;
        seen[g] = true;
      }
    }
    for (std::size_t x = 1; x <= n; ++x)
      for (std::size_t y = 1; y <= n; ++y)
        if (clash(gam(gam(y, x), sig(x, y)), y)) return false;
    for (std::size_t x = 1; x <= n; ++x)
      for (std::size_t y = 1; y <= n; ++y)
        for (std::size_t z = 1; z <= n; ++z) {
          const std::size_t sx_y = sig(x, y);
          const std::size_t gy_x = gam(y, x);
          if (clash(sig(x, sig(y, z)), sig(sx_y, sig(gy_x, z)))) return false;
          if (clash(gam(z, gam(y, x)), gam(gam(z, y), gam(sig(y, z), x)))) return false;
          if (clash(gam(sig(gy_x, z), sx_y), sig(gam(sig(y, z), x), gam(z, y)))) return false;
        }
    return true;
  }

  std::size_t n_;
  const std::vector<Permutation>& perms_;
  std::vector<const std::vector<std::size_t>*> sigma_;
  std::vector<std::vector<std::size_t>> inv_;
  std::size_t assigned_ = 0;
};

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{1});
  std::vector<Permutation> perms;
  do {
    perms.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return perms;
}

}  // namespace

std::vector<SetSolution> enumerate_solutions(const EnumerationConfig& cfg) {
  if (cfg.n == 0) throw PreconditionError("enumerate_solutions: n must be at least 1");
  const std::vector<Permutation> perms = all_permutations(cfg.n);

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, perms.size()));

  std::vector<SetSolution> found;
  std::mutex found_mutex;
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next_choice{0};
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      SigmaSearch search(cfg.n, perms);
      auto emit = [&](SetSolution s) {
        std::lock_guard lock(found_mutex);
        found.push_back(std::move(s));
        if (cfg.limit && !cfg.dedupe && found.size() > *cfg.limit) stop = true;
      };
      for (std::size_t c = next_choice++; c < perms.size() && !stop; c = next_choice++) search.run_from(c, emit, stop);
    } catch (...) {
      std::lock_guard lock(found_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(found.begin(), found.end());
  if (cfg.dedupe) found = dedupe_up_to_iso(std::move(found)).representatives;
  if (cfg.limit && found.size() > *cfg.limit) {
    throw ResourceLimitError("enumeration for n=" + std::to_string(cfg.n) + " exceeds the limit of " +
                             std::to_string(*cfg.limit) + " solutions");
  }
  return found;
}

DedupeResult dedupe_up_to_iso(std::vector<SetSolution> sols) {
  std::sort(sols.begin(), sols.end());
  DedupeResult out;
  for (auto& s : sols) {
    if (!out.representatives.empty() && s.size() != out.representatives.front().size()) {
      throw DimensionError("dedupe_up_to_iso: solutions of different size");
    }
    bool matched = false;
    for (std::size_t k = 0; k < out.representatives.size(); ++k) {
      if (isomorphic_set(out.representatives[k], s)) {
        ++out.class_sizes[k];
        matched = true;
        break;
      }
    }
    if (!matched) {
      out.representatives.push_back(std::move(s));
      out.class_sizes.push_back(1);
    }
  }
  return out;
}

}  // namespace ybekit
