#pragma once

// Lexicographical sums: a selection acting as η_Δ inside each part Δ and as
// the part-level selection γ across parts.

#include <span>
#include <vector>

#include "wsel/point_set.hpp"
#include "wsel/topology.hpp"
#include "wsel/tournament.hpp"

namespace wsel {

struct PartitionedSelection {
  /// Pairwise disjoint, covering {0, ..., n-1}. Part i's points are
  /// labelled 0..|part|-1 inside etas[i] in increasing order.
  std::vector<PointSet> parts;
  /// Selection on part indices.
  Tournament gamma;
  std::vector<Tournament> etas;
};

/// Throws PartitionInvalid describing the first broken invariant.
void validate(const PartitionedSelection& p);

Tournament lexsum(const PartitionedSelection& p);

/// Outcome of checking that a lexicographical sum inherits separate and
/// Vietoris continuity from its summands, for the disjoint-sum topology.
struct LexsumContinuityReport {
  bool summands_separately = false;
  bool sum_separately = false;
  bool summands_vietoris = false;
  bool sum_vietoris = false;

  bool separate_clause_holds() const { return !summands_separately || sum_separately; }
  bool vietoris_clause_holds() const { return !summands_vietoris || sum_vietoris; }
  bool ok() const { return separate_clause_holds() && vietoris_clause_holds(); }
};

LexsumContinuityReport check_lexsum_continuity(const PartitionedSelection& p,
                                               std::span<const FiniteTopology> part_topologies);

}  // namespace wsel
