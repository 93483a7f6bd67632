#pragma once

// Finite weak selections, represented as tournaments, and the dominance
// relations built from them.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wsel/point_set.hpp"

namespace wsel {

/// A weak selection on {0, ..., n-1}: for x != y exactly one of x <σ y,
/// y <σ x holds, where x <σ y means the selection picks x from {x, y}.
/// The order-like relation ≤σ is `less` plus equality.
class Tournament {
 public:
  /// The one-point tournament.
  Tournament();

  /// Builds from the listed pairs (x, y), each meaning x <σ y. Every
  /// unordered pair must appear exactly once.
  static Tournament from_pairs(int n, std::span<const std::pair<int, int>> pairs);
  /// `above[x]` is the interval (x, →), i.e. all y with x <σ y.
  static Tournament from_above_sets(std::vector<PointSet> above);
  /// The linear order 0 <σ 1 <σ ... <σ n-1.
  static Tournament chain(int n);
  /// Inverse of `code()`.
  static Tournament from_code(int n, std::uint64_t code);

  int size() const { return static_cast<int>(above_.size()); }
  PointSet ground() const { return PointSet::full(size()); }

  bool less(int x, int y) const { return above_[x].contains(y); }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  /// (x, →) = {y : x <σ y}
  PointSet above(int x) const { return above_[x]; }
  /// (←, x) = {y : y <σ x}
  PointSet below(int x) const { return below_[x]; }

  /// Row-major bit encoding over pairs i < j, first pair in the most
  /// significant position; the bit is set iff i <σ j. Requires n <= 11.
  std::uint64_t code() const;
  /// Tournament whose point i is this tournament's point perm[i].
  Tournament relabel(std::span<const int> perm) const;
  /// Sub-tournament on `subset`, relabelled in increasing label order.
  Tournament induced(PointSet subset) const;
  /// The complementary selection: ≤ reversed.
  Tournament reversed() const;
  bool is_transitive() const;

  /// All pairs (x, y) with x <σ y, in row-major order of unordered pairs.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Tournament& other) const { return above_ == other.above_; }

 private:
  explicit Tournament(std::vector<PointSet> above);

  std::vector<PointSet> above_;
  std::vector<PointSet> below_;
};

/// Largest n for which `Tournament::code()` fits in 64 bits.
inline constexpr int kMaxCodedPoints = 11;

/// A binary relation on {0, ..., n-1}; row x holds every y with rel(x, y).
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::vector<PointSet> rows) : rows_(std::move(rows)) {}

  int size() const { return static_cast<int>(rows_.size()); }
  bool operator()(int x, int y) const { return rows_[x].contains(y); }
  PointSet row(int x) const { return rows_[x]; }
  /// All x with rel(x, y).
  PointSet column(int y) const;
  bool subset_of(const Relation& other) const;
  bool is_transitive() const;

  bool operator==(const Relation&) const = default;

 private:
  std::vector<PointSet> rows_;
};

/// ≤σ ⊆ ≪σ ⊆ ⋘σ: ≪σ allows one intermediate point, ⋘σ any finite chain.
struct RelationTriple {
  Relation leq;
  Relation ll;
  Relation lll;
};

RelationTriple relation_closures(const Tournament& t);

/// Reflexive-transitive closure of a relation (bit-row Warshall).
Relation transitive_closure(const Relation& r);

struct KingReport {
  PointSet kings;
  PointSet quasi_kings;
  std::optional<int> emperor;
  /// Strongly connected classes; every edge x <σ y across classes runs from
  /// an earlier class to a later one.
  std::vector<PointSet> condensation;
  /// (x, q) -> a shortest ≤σ-chain x, ..., q. Filled only on request.
  std::map<std::pair<int, int>, std::vector<int>> witness_chains;
};

enum class Witnesses { none, all };

KingReport king_report(const Tournament& t, Witnesses witnesses = Witnesses::none);

/// Shortest chain x = y0 <σ y1 <σ ... <σ yk = q, or nullopt if q is not
/// reachable. The chain for x == q is {x}.
std::optional<std::vector<int>> witness_chain(const Tournament& t, int x, int q);

/// Strongly connected classes in topological order (Tarjan), each class
/// sorted by label.
std::vector<PointSet> condensation(const Tournament& t);

/// A quasi-king found by intersecting the closures of the reach sets
/// K_x = {p : x ⋘σ p} in the selection topology; ties break to the
/// smallest label.
int quasi_king_via_reach_sets(const Tournament& t);

}  // namespace wsel
