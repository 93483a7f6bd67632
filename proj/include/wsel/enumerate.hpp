#pragma once

// Exhaustive and random generation of tournaments, and canonical labelling.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "wsel/parallel.hpp"
#include "wsel/tournament.hpp"

namespace wsel {

struct EnumerationLimits {
  int max_labeled_n = 7;
  int max_iso_n = 7;
};

/// Largest n accepted by canonical_form (brute force over n! relabellings).
inline constexpr int kMaxCanonicalPoints = 9;

/// The relabelling of t with the smallest `code()`.
Tournament canonical_form(const Tournament& t);
/// canonical_form(t) == t, with early exit.
bool is_canonical(const Tournament& t);

/// One canonical representative per isomorphism class, sorted by code.
/// Classes for n are grown from the classes for n-1 by attaching a new point
/// in every possible way; `exec` picks the serial or OpenMP kernel.
std::vector<Tournament> iso_classes(int n, Exec exec = Exec::parallel,
                                    const EnumerationLimits& limits = {});

/// Kernel behind iso_classes: canonical representatives on n+1 points from
/// the complete class list on n points. Never cached.
std::vector<Tournament> extend_iso_classes(const std::vector<Tournament>& classes, Exec exec);

/// Streams every tournament on n points (code order when labeled, canonical
/// code order when up to isomorphism).
void enumerate_tournaments(int n, bool up_to_iso, const std::function<void(const Tournament&)>& sink,
                           const EnumerationLimits& limits = {});

/// Uniformly random labeled tournament.
Tournament random_tournament(int n, std::mt19937_64& rng);

/// Seed for case `index` of a seeded sweep; independent of scheduling.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace wsel
