#include "wsel/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "wsel/error.hpp"

namespace wsel {
namespace {

void check_canonical_size(int n) {
  if (n > kMaxCanonicalPoints) {
    throw Error(ErrorCode::size_limit,
                "canonical form needs n <= " + std::to_string(kMaxCanonicalPoints));
  }
}

// Code of t relabelled by perm, abandoned as soon as its prefix exceeds
// `bound`. Returns bound + 1 (or max) when abandoned.
std::uint64_t bounded_code(const Tournament& t, std::span<const int> perm, std::uint64_t bound) {
  const int n = t.size();
  const int bits = n * (n - 1) / 2;
  std::uint64_t code = 0;
  int remaining = bits;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      --remaining;
      code = (code << 1) | (t.less(perm[i], perm[j]) ? 1U : 0U);
      if ((code << remaining) > bound) return ~std::uint64_t{0};
    }
  }
  return code;
}

std::uint64_t canonical_code(const Tournament& t) {
  check_canonical_size(t.size());
  std::array<int, kMaxCanonicalPoints> storage{};
  std::span<int> perm(storage.data(), static_cast<std::size_t>(t.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, bounded_code(t, perm, best));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Tournament> grow(const std::vector<Tournament>& smaller, Exec exec) {
  const int m = smaller.front().size();
  const std::size_t patterns = std::size_t{1} << m;
  const std::size_t candidates = smaller.size() * patterns;
  std::vector<std::uint64_t> codes = collect<std::uint64_t>(candidates, exec, [&](std::size_t i) {
    const Tournament& base = smaller[i / patterns];
    const std::uint64_t pattern = i % patterns;
    std::vector<PointSet> above(m + 1);
    for (int x = 0; x < m; ++x) {
      above[x] = base.above(x);
      if ((pattern >> x) & 1U) {
        above[x].insert(m);
      } else {
        above[m].insert(x);
      }
    }
    return std::optional<std::uint64_t>(canonical_code(Tournament::from_above_sets(std::move(above))));
  });
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Tournament> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(Tournament::from_code(m + 1, c));
  return out;
}

}  // namespace

std::vector<Tournament> extend_iso_classes(const std::vector<Tournament>& classes, Exec exec) {
  if (classes.empty()) throw Error(ErrorCode::size_limit, "no classes to extend");
  check_canonical_size(classes.front().size() + 1);
  return grow(classes, exec);
}

Tournament canonical_form(const Tournament& t) {
  return Tournament::from_code(t.size(), canonical_code(t));
}

bool is_canonical(const Tournament& t) {
  check_canonical_size(t.size());
  const std::uint64_t own = t.code();
  std::array<int, kMaxCanonicalPoints> storage{};
  std::span<int> perm(storage.data(), static_cast<std::size_t>(t.size()));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (bounded_code(t, perm, own) < own) return false;
  }
  return true;
}

std::vector<Tournament> iso_classes(int n, Exec exec, const EnumerationLimits& limits) {
  if (n < 1 || n > limits.max_iso_n) {
    throw Error(ErrorCode::size_limit,
                "iso enumeration needs 1 <= n <= " + std::to_string(limits.max_iso_n));
  }
  check_canonical_size(n);
  // Class lists are immutable once built, so they are shared between calls.
  static std::mutex mutex;
  static std::map<int, std::vector<Tournament>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Tournament> classes{Tournament()};
  for (int m = 2; m <= n; ++m) {
    std::vector<Tournament> cached;
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(m); it != cache.end()) cached = it->second;
    }
    classes = cached.empty() ? grow(classes, exec) : std::move(cached);
    std::lock_guard lock(mutex);
    cache.emplace(m, classes);
  }
  return classes;
}

void enumerate_tournaments(int n, bool up_to_iso, const std::function<void(const Tournament&)>& sink,
                           const EnumerationLimits& limits) {
  if (up_to_iso) {
    for (const Tournament& t : iso_classes(n, Exec::parallel, limits)) sink(t);
    return;
  }
  if (n < 1 || n > limits.max_labeled_n) {
    throw Error(ErrorCode::size_limit,
                "labeled enumeration needs 1 <= n <= " + std::to_string(limits.max_labeled_n));
  }
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t c = 0; c < count; ++c) sink(Tournament::from_code(n, c));
}

Tournament random_tournament(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1U) {
        pairs.emplace_back(i, j);
      } else {
        pairs.emplace_back(j, i);
      }
    }
  }
  return Tournament::from_pairs(n, pairs);
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace wsel
