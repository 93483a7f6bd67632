#pragma once

// Selection topologies and the three continuity notions for a tournament
// paired with a finite topology.

#include <vector>

#include "wsel/point_set.hpp"
#include "wsel/topology.hpp"
#include "wsel/tournament.hpp"

namespace wsel {

/// For each x in order: (←, x) then (x, →). 2n sets, repeats and empties kept.
std::vector<PointSet> interval_subbase(const Tournament& t);

/// The topology generated by the open intervals of ≤σ.
FiniteTopology selection_topology(const Tournament& t);

/// A weak selection for a space: tournament and topology on the same points.
class SelectionOnSpace {
 public:
  SelectionOnSpace(Tournament t, FiniteTopology topology);

  const Tournament& selection() const { return t_; }
  const FiniteTopology& topology() const { return topology_; }

 private:
  Tournament t_;
  FiniteTopology topology_;
};

/// The selection topology is coarser than the space's topology.
bool separately_continuous(const SelectionOnSpace& s);
/// For every x <σ y there are open U ∋ x, V ∋ y with U <σ V. Tested on
/// minimal neighbourhoods, which is exact for finite spaces.
bool vietoris_continuous(const SelectionOnSpace& s);
/// Separately continuous, and Vietoris continuous w.r.t. its own
/// selection topology.
bool properly_continuous(const SelectionOnSpace& s);

struct ContinuityReport {
  bool separately = false;
  bool vietoris = false;
  bool properly = false;
  bool selection_topology_discrete = false;
  /// The space's topology; finite Hausdorff means discrete.
  bool hausdorff = false;
};

ContinuityReport check_continuity(const SelectionOnSpace& s);

struct RestrictionReport {
  Tournament restricted;
  /// restricted point i is original point labels[i]
  std::vector<int> labels;
  /// T_{σ|Z} ⊆ T_σ|Z
  bool inclusion = false;
  /// T_{σ|Z} = T_σ|Z
  bool equality = false;
};

/// Throws EmptySubset for an empty z.
RestrictionReport restriction(const Tournament& t, PointSet z);

}  // namespace wsel
