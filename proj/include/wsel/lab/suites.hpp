#pragma once

// Named invariant sweeps. Each suite is deterministic given its bounds and
// seed; the OpenMP and serial paths return identical results.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wsel/parallel.hpp"

namespace wsel::lab {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Unset fields take per-suite defaults (see suite_defaults).
struct SuiteBounds {
  std::optional<int> max_n;
  std::optional<int> random_cases;
  std::optional<int> random_max_n;
  std::optional<int> max_blocks;
  std::optional<int> density;
  std::uint64_t seed = kDefaultSeed;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  /// Serialised witnesses, in enumeration order.
  std::vector<std::string> failures;
  double wall_seconds = 0.0;
  std::uint64_t seed = kDefaultSeed;
  /// Bounds after defaults were applied.
  SuiteBounds bounds;

  bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
/// Throws UnknownSuite.
SuiteBounds suite_defaults(std::string_view name);
/// Throws UnknownSuite.
SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds = {},
                      Exec exec = Exec::parallel);

/// Machine-readable report; wall time is left out so identical runs yield
/// identical bytes.
nlohmann::json encode(const SuiteResult& r);

}  // namespace wsel::lab
