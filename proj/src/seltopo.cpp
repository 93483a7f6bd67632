#include "wsel/seltopo.hpp"

#include "wsel/error.hpp"

namespace wsel {

std::vector<PointSet> interval_subbase(const Tournament& t) {
  std::vector<PointSet> subbase;
  subbase.reserve(2 * static_cast<std::size_t>(t.size()));
  for (int x = 0; x < t.size(); ++x) {
    subbase.push_back(t.below(x));
    subbase.push_back(t.above(x));
  }
  return subbase;
}

FiniteTopology selection_topology(const Tournament& t) {
  const std::vector<PointSet> subbase = interval_subbase(t);
  return generate_from_subbase(t.size(), subbase);
}

SelectionOnSpace::SelectionOnSpace(Tournament t, FiniteTopology topology)
    : t_(std::move(t)), topology_(std::move(topology)) {
  if (t_.size() != topology_.size()) {
    throw Error(ErrorCode::size_mismatch, "tournament and topology sizes differ");
  }
}

bool separately_continuous(const SelectionOnSpace& s) {
  return is_coarser(selection_topology(s.selection()), s.topology());
}

bool vietoris_continuous(const SelectionOnSpace& s) {
  const Tournament& t = s.selection();
  const FiniteTopology& top = s.topology();
  for (int x = 0; x < t.size(); ++x) {
    for (int y : t.above(x)) {
      const PointSet v = top.min_nbhd(y);
      for (int u : top.min_nbhd(x)) {
        if (!v.subset_of(t.above(u))) return false;
      }
    }
  }
  return true;
}

bool properly_continuous(const SelectionOnSpace& s) {
  if (!separately_continuous(s)) return false;
  return vietoris_continuous(SelectionOnSpace(s.selection(), selection_topology(s.selection())));
}

ContinuityReport check_continuity(const SelectionOnSpace& s) {
  ContinuityReport r;
  r.separately = separately_continuous(s);
  r.vietoris = vietoris_continuous(s);
  r.properly = properly_continuous(s);
  r.selection_topology_discrete = selection_topology(s.selection()).is_discrete();
  r.hausdorff = s.topology().is_hausdorff();
  return r;
}

RestrictionReport restriction(const Tournament& t, PointSet z) {
  if (z.empty()) throw Error(ErrorCode::empty_subset, "restriction to the empty set");
  RestrictionReport r{t.induced(z), z.to_vector(), false, false};
  const FiniteTopology own = selection_topology(r.restricted);
  const FiniteTopology inherited = subspace(selection_topology(t), z);
  r.inclusion = is_coarser(own, inherited);
  r.equality = own == inherited;
  return r;
}

}  // namespace wsel
