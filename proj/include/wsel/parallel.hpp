#pragma once

// Index-space sweep kernels. Every sweep has a serial reference path and an
// OpenMP path; both must produce identical, index-ordered results.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wsel {

enum class Exec { serial, parallel };

/// Runs `f(i)` for i in [0, count) and keeps the engaged results, ordered by i.
template <class T, class F>
std::vector<T> collect(std::size_t count, Exec exec, F&& f) {
  std::vector<std::pair<std::size_t, T>> hits;
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (std::optional<T> r = f(i)) hits.emplace_back(i, std::move(*r));
    }
  } else {
#pragma omp parallel
    {
      std::vector<std::pair<std::size_t, T>> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (std::optional<T> r = f(idx)) local.emplace_back(idx, std::move(*r));
      }
#pragma omp critical(wsel_collect_merge)
      hits.insert(hits.end(), std::make_move_iterator(local.begin()),
                  std::make_move_iterator(local.end()));
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::vector<T> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(std::move(h.second));
  return out;
}

/// Number of i in [0, count) with `pred(i)`.
template <class F>
std::size_t count_if(std::size_t count, Exec exec, F&& pred) {
  std::size_t total = 0;
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) total += pred(i) ? 1 : 0;
    return total;
  }
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    total += pred(static_cast<std::size_t>(i)) ? 1 : 0;
  }
  return total;
}

/// Smallest i in [0, count) with `pred(i)`, if any.
template <class F>
std::optional<std::size_t> find_first(std::size_t count, Exec exec, F&& pred) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::size_t best = count;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < best && pred(idx)) best = idx;
  }
  if (best == count) return std::nullopt;
  return best;
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace wsel
