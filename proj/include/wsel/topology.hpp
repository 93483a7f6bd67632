#pragma once

// Finite topological spaces, stored through minimal open neighbourhoods.
// The open sets are exactly the unions of minimal neighbourhoods, so a
// topology on n points is the same thing as a preorder.

#include <span>
#include <vector>

#include "wsel/point_set.hpp"

namespace wsel {

/// Open-set materialisation bound: above it open_sets() and the clopen
/// machinery throw SizeLimit.
inline constexpr int kMaxMaterializedPoints = 20;

class FiniteTopology {
 public:
  /// Validates x ∈ U(x) and y ∈ U(x) ⇒ U(y) ⊆ U(x); throws NotATopology.
  static FiniteTopology from_min_neighborhoods(std::vector<PointSet> min_nbhd);
  static FiniteTopology discrete(int n);
  static FiniteTopology indiscrete(int n);

  int size() const { return static_cast<int>(min_nbhd_.size()); }
  PointSet ground() const { return PointSet::full(size()); }
  PointSet min_nbhd(int x) const { return min_nbhd_[x]; }
  std::span<const PointSet> min_neighborhoods() const { return min_nbhd_; }

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(ground() - a); }
  /// Every open set, sorted by bit pattern.
  std::vector<PointSet> open_sets() const;

  bool is_discrete() const;
  bool is_indiscrete() const;
  bool is_t0() const;
  /// Finite Hausdorff spaces are discrete.
  bool is_hausdorff() const { return is_discrete(); }

  bool operator==(const FiniteTopology&) const = default;

 private:
  explicit FiniteTopology(std::vector<PointSet> min_nbhd) : min_nbhd_(std::move(min_nbhd)) {}

  std::vector<PointSet> min_nbhd_;
};

/// Smallest topology in which every member of `subbase` is open.
FiniteTopology generate_from_subbase(int n, std::span<const PointSet> subbase);

struct OpenFamilyResult {
  FiniteTopology topology;
  /// False when the family had to be completed under ∪ / ∩ (or ∅, X added).
  bool was_topology = true;
};

/// Reads a family of open sets. In strict mode a family that is not already
/// a topology is rejected with NotATopology; otherwise it is completed.
OpenFamilyResult from_open_family(int n, std::span<const PointSet> opens, bool strict);

/// True iff every s-open set is t-open.
bool is_coarser(const FiniteTopology& s, const FiniteTopology& t);

PointSet closure(const FiniteTopology& t, PointSet a);
PointSet interior(const FiniteTopology& t, PointSet a);

/// Connected components, ordered by smallest member.
Partition components(const FiniteTopology& t);
/// All sets A with A and X∖A open, sorted by bit pattern.
std::vector<PointSet> clopen_sets(const FiniteTopology& t);
/// Intersections of the clopen sets through each point, ordered by
/// smallest member.
Partition quasi_components(const FiniteTopology& t);

/// Subspace topology on z, relabelled to 0..|z|-1 in increasing order.
FiniteTopology subspace(const FiniteTopology& t, PointSet z);

/// Disjoint-sum topology on the union of `parts`; `part_topologies[i]` lives
/// on parts[i] relabelled in increasing order.
FiniteTopology sum_topology(std::span<const PointSet> parts,
                            std::span<const FiniteTopology> part_topologies);

/// Every topology on n points (n <= 5), in a fixed deterministic order.
std::vector<FiniteTopology> enumerate_topologies(int n);

}  // namespace wsel
