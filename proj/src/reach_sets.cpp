#include <string>
#include <vector>

#include "wsel/error.hpp"
#include "wsel/seltopo.hpp"
#include "wsel/tournament.hpp"

namespace wsel {

int quasi_king_via_reach_sets(const Tournament& t) {
  const int n = t.size();
  const Relation lll = relation_closures(t).lll;

  // K_x = {p : x ⋘σ p}
  std::vector<PointSet> reach(n);
  for (int x = 0; x < n; ++x) reach[x] = lll.row(x);

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!reach[x].subset_of(reach[y]) && !reach[y].subset_of(reach[x])) {
        throw Error(ErrorCode::internal_invariant_violation,
                    "reach sets of " + std::to_string(x) + " and " + std::to_string(y) +
                        " are not nested");
      }
    }
  }

  const FiniteTopology tau = selection_topology(t);
  PointSet common = t.ground();
  for (int x = 0; x < n; ++x) common &= closure(tau, reach[x]);
  if (common.empty()) {
    throw Error(ErrorCode::internal_invariant_violation, "closures of reach sets are disjoint");
  }

  const int p = common.first();
  if ((t.below(p) | PointSet::single(p)) == t.ground()) return p;

  PointSet in_every_reach = t.ground();
  for (int x = 0; x < n; ++x) in_every_reach &= reach[x];
  const PointSet candidates = t.above(p) & in_every_reach;
  if (candidates.empty()) {
    throw Error(ErrorCode::internal_invariant_violation,
                "no successor of " + std::to_string(p) + " lies in every reach set");
  }
  return candidates.first();
}

}  // namespace wsel
