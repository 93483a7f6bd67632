#include "wsel/topology.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "wsel/error.hpp"

namespace wsel {
namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxPoints) {
    throw Error(ErrorCode::size_limit, "space size " + std::to_string(n) + " outside [1, 64]");
  }
}

void check_materializable(int n) {
  if (n > kMaxMaterializedPoints) {
    throw Error(ErrorCode::size_limit,
                "open-set materialisation needs n <= " + std::to_string(kMaxMaterializedPoints));
  }
}

void check_in_range(PointSet a, int n) {
  if (!a.subset_of(PointSet::full(n))) {
    throw Error(ErrorCode::out_of_range_point,
                "set has a point >= " + std::to_string(n));
  }
}

Partition sorted_classes(std::vector<PointSet> classes) {
  std::sort(classes.begin(), classes.end(),
            [](PointSet a, PointSet b) { return a.first() < b.first(); });
  return classes;
}

}  // namespace

FiniteTopology FiniteTopology::from_min_neighborhoods(std::vector<PointSet> min_nbhd) {
  const int n = static_cast<int>(min_nbhd.size());
  check_size(n);
  for (int x = 0; x < n; ++x) {
    check_in_range(min_nbhd[x], n);
    if (!min_nbhd[x].contains(x)) {
      throw Error(ErrorCode::not_a_topology, "point " + std::to_string(x) + " not in U(x)");
    }
    for (int y : min_nbhd[x]) {
      if (!min_nbhd[y].subset_of(min_nbhd[x])) {
        throw Error(ErrorCode::not_a_topology, "U(" + std::to_string(y) + ") not inside U(" +
                                                   std::to_string(x) + ")");
      }
    }
  }
  return FiniteTopology(std::move(min_nbhd));
}

FiniteTopology FiniteTopology::discrete(int n) {
  check_size(n);
  std::vector<PointSet> u(n);
  for (int x = 0; x < n; ++x) u[x] = PointSet::single(x);
  return FiniteTopology(std::move(u));
}

FiniteTopology FiniteTopology::indiscrete(int n) {
  check_size(n);
  return FiniteTopology(std::vector<PointSet>(n, PointSet::full(n)));
}

bool FiniteTopology::is_open(PointSet a) const {
  for (int x : a) {
    if (!min_nbhd_[x].subset_of(a)) return false;
  }
  return true;
}

std::vector<PointSet> FiniteTopology::open_sets() const {
  check_materializable(size());
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<PointSet> frontier{PointSet{}};
  std::vector<PointSet> all{PointSet{}};
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (PointSet open : frontier) {
      for (int x = 0; x < size(); ++x) {
        const PointSet bigger = open | min_nbhd_[x];
        if (seen.insert(bigger.bits()).second) {
          next.push_back(bigger);
          all.push_back(bigger);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool FiniteTopology::is_discrete() const {
  for (int x = 0; x < size(); ++x) {
    if (min_nbhd_[x] != PointSet::single(x)) return false;
  }
  return true;
}

bool FiniteTopology::is_indiscrete() const {
  for (PointSet u : min_nbhd_) {
    if (u != ground()) return false;
  }
  return true;
}

bool FiniteTopology::is_t0() const {
  for (int x = 0; x < size(); ++x) {
    for (int y = x + 1; y < size(); ++y) {
      if (min_nbhd_[x] == min_nbhd_[y]) return false;
    }
  }
  return true;
}

FiniteTopology generate_from_subbase(int n, std::span<const PointSet> subbase) {
  check_size(n);
  std::vector<PointSet> u(n, PointSet::full(n));
  for (PointSet s : subbase) {
    check_in_range(s, n);
    for (int x : s) u[x] &= s;
  }
  return FiniteTopology::from_min_neighborhoods(std::move(u));
}

OpenFamilyResult from_open_family(int n, std::span<const PointSet> opens, bool strict) {
  check_size(n);
  std::unordered_set<std::uint64_t> family;
  for (PointSet s : opens) {
    check_in_range(s, n);
    family.insert(s.bits());
  }
  bool closed = family.contains(0) && family.contains(PointSet::full(n).bits());
  for (auto it = family.begin(); closed && it != family.end(); ++it) {
    for (std::uint64_t other : family) {
      if (!family.contains(*it | other) || !family.contains(*it & other)) {
        closed = false;
        break;
      }
    }
  }
  if (!closed && strict) {
    throw Error(ErrorCode::not_a_topology, "open family not closed under union/intersection");
  }
  return {generate_from_subbase(n, opens), closed};
}

bool is_coarser(const FiniteTopology& s, const FiniteTopology& t) {
  if (s.size() != t.size()) throw Error(ErrorCode::size_mismatch, "is_coarser");
  // Each s-open set is a union of s-minimal neighbourhoods; it is t-open iff
  // every point's t-minimal neighbourhood fits inside its s-one.
  for (int x = 0; x < s.size(); ++x) {
    if (!t.min_nbhd(x).subset_of(s.min_nbhd(x))) return false;
  }
  return true;
}

PointSet closure(const FiniteTopology& t, PointSet a) {
  check_in_range(a, t.size());
  PointSet out;
  for (int x = 0; x < t.size(); ++x) {
    if (t.min_nbhd(x).intersects(a)) out.insert(x);
  }
  return out;
}

PointSet interior(const FiniteTopology& t, PointSet a) {
  check_in_range(a, t.size());
  PointSet out;
  for (int x : a) {
    if (t.min_nbhd(x).subset_of(a)) out.insert(x);
  }
  return out;
}

Partition components(const FiniteTopology& t) {
  const int n = t.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < n; ++x) {
    for (int y : t.min_nbhd(x)) parent[find(y)] = find(x);
  }
  std::vector<PointSet> by_root(n);
  for (int x = 0; x < n; ++x) by_root[find(x)].insert(x);
  std::vector<PointSet> classes;
  for (PointSet c : by_root) {
    if (!c.empty()) classes.push_back(c);
  }
  return sorted_classes(std::move(classes));
}

std::vector<PointSet> clopen_sets(const FiniteTopology& t) {
  std::vector<PointSet> out;
  for (PointSet open : t.open_sets()) {
    if (t.is_closed(open)) out.push_back(open);
  }
  return out;
}

Partition quasi_components(const FiniteTopology& t) {
  const std::vector<PointSet> clopens = clopen_sets(t);
  std::vector<PointSet> classes;
  PointSet covered;
  for (int x = 0; x < t.size(); ++x) {
    if (covered.contains(x)) continue;
    PointSet q = t.ground();
    for (PointSet c : clopens) {
      if (c.contains(x)) q &= c;
    }
    covered |= q;
    classes.push_back(q);
  }
  return sorted_classes(std::move(classes));
}

FiniteTopology subspace(const FiniteTopology& t, PointSet z) {
  check_in_range(z, t.size());
  if (z.empty()) throw Error(ErrorCode::empty_subset, "subspace");
  const std::vector<int> labels = z.to_vector();
  std::vector<int> local(t.size(), -1);
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) local[labels[i]] = i;
  std::vector<PointSet> u(labels.size());
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    for (int y : t.min_nbhd(labels[i]) & z) u[i].insert(local[y]);
  }
  return FiniteTopology::from_min_neighborhoods(std::move(u));
}

FiniteTopology sum_topology(std::span<const PointSet> parts,
                            std::span<const FiniteTopology> part_topologies) {
  if (parts.size() != part_topologies.size()) {
    throw Error(ErrorCode::size_mismatch, "one topology per part");
  }
  PointSet all;
  for (PointSet p : parts) {
    if (p.empty() || all.intersects(p)) {
      throw Error(ErrorCode::partition_invalid, "parts must be nonempty and disjoint");
    }
    all |= p;
  }
  const int n = all.size();
  if (all != PointSet::full(n)) throw Error(ErrorCode::partition_invalid, "parts must cover 0..n-1");
  std::vector<PointSet> u(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::vector<int> labels = parts[i].to_vector();
    if (static_cast<int>(labels.size()) != part_topologies[i].size()) {
      throw Error(ErrorCode::size_mismatch, "part " + std::to_string(i) + " topology size");
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      for (int local : part_topologies[i].min_nbhd(static_cast<int>(k))) {
        u[labels[k]].insert(labels[local]);
      }
    }
  }
  return FiniteTopology::from_min_neighborhoods(std::move(u));
}

std::vector<FiniteTopology> enumerate_topologies(int n) {
  check_size(n);
  if (n > 5) throw Error(ErrorCode::size_limit, "topology enumeration needs n <= 5");
  const int free_bits = n * (n - 1);
  std::vector<FiniteTopology> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
    std::vector<PointSet> u(n);
    int bit = 0;
    for (int x = 0; x < n; ++x) {
      u[x].insert(x);
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if ((mask >> bit++) & 1U) u[x].insert(y);
      }
    }
    bool coherent = true;
    for (int x = 0; x < n && coherent; ++x) {
      for (int y : u[x]) {
        if (!u[y].subset_of(u[x])) {
          coherent = false;
          break;
        }
      }
    }
    if (coherent) out.push_back(FiniteTopology::from_min_neighborhoods(std::move(u)));
  }
  return out;
}

}  // namespace wsel
