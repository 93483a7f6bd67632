#include "wsel/lexsum.hpp"

#include <string>

#include "wsel/error.hpp"
#include "wsel/seltopo.hpp"

namespace wsel {

void validate(const PartitionedSelection& p) {
  if (p.parts.empty()) throw Error(ErrorCode::partition_invalid, "no parts");
  if (p.gamma.size() != static_cast<int>(p.parts.size())) {
    throw Error(ErrorCode::partition_invalid, "gamma size differs from part count");
  }
  if (p.etas.size() != p.parts.size()) {
    throw Error(ErrorCode::partition_invalid, "one eta per part required");
  }
  PointSet all;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const PointSet part = p.parts[i];
    if (part.empty()) throw Error(ErrorCode::partition_invalid, "part " + std::to_string(i) + " empty");
    if (all.intersects(part)) {
      throw Error(ErrorCode::partition_invalid, "part " + std::to_string(i) + " overlaps another");
    }
    if (p.etas[i].size() != part.size()) {
      throw Error(ErrorCode::partition_invalid, "eta " + std::to_string(i) + " size differs");
    }
    all |= part;
  }
  if (all != PointSet::full(all.size())) {
    throw Error(ErrorCode::partition_invalid, "parts do not cover 0..n-1");
  }
}

Tournament lexsum(const PartitionedSelection& p) {
  validate(p);
  int n = 0;
  for (PointSet part : p.parts) n += part.size();

  std::vector<int> part_of(n);
  std::vector<int> local(n);
  std::vector<std::vector<int>> labels(p.parts.size());
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    labels[i] = p.parts[i].to_vector();
    for (std::size_t k = 0; k < labels[i].size(); ++k) {
      part_of[labels[i][k]] = static_cast<int>(i);
      local[labels[i][k]] = static_cast<int>(k);
    }
  }

  std::vector<PointSet> above(n);
  for (int x = 0; x < n; ++x) {
    const int px = part_of[x];
    for (int y = 0; y < n; ++y) {
      const int py = part_of[y];
      const bool less = px == py ? p.etas[px].less(local[x], local[y]) : p.gamma.less(px, py);
      if (less) above[x].insert(y);
    }
  }
  return Tournament::from_above_sets(std::move(above));
}

LexsumContinuityReport check_lexsum_continuity(const PartitionedSelection& p,
                                               std::span<const FiniteTopology> part_topologies) {
  validate(p);
  const Tournament sigma = lexsum(p);
  const FiniteTopology sum = sum_topology(p.parts, part_topologies);

  LexsumContinuityReport r;
  r.summands_separately = true;
  r.summands_vietoris = true;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const SelectionOnSpace part(p.etas[i], part_topologies[i]);
    r.summands_separately = r.summands_separately && separately_continuous(part);
    r.summands_vietoris = r.summands_vietoris && vietoris_continuous(part);
  }
  const SelectionOnSpace whole(sigma, sum);
  r.sum_separately = separately_continuous(whole);
  r.sum_vietoris = vietoris_continuous(whole);
  return r;
}

}  // namespace wsel
