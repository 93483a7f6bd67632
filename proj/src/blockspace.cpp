#include "wsel/blockspace.hpp"

#include <string>

#include "wsel/error.hpp"
#include "wsel/lexsum.hpp"

namespace wsel {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::open: return "open";
    case BlockKind::closed: return "closed";
    case BlockKind::left_closed: return "left_closed";
    case BlockKind::right_closed: return "right_closed";
    case BlockKind::point: return "point";
    case BlockKind::finite_chain: return "finite_chain";
  }
  return "?";
}

BlockKind block_kind_from_string(std::string_view name) {
  for (BlockKind k : kAllBlockKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::parse_error, "unknown block kind '" + std::string(name) + "'");
}

std::string_view to_string(Qualifier q) {
  switch (q) {
    case Qualifier::none: return "none";
    case Qualifier::block_max: return "block_max";
    case Qualifier::every_point: return "every_point";
  }
  return "?";
}

std::string_view to_string(CutKind c) {
  switch (c) {
    case CutKind::jump: return "jump";
    case CutKind::gap: return "gap";
    case CutKind::mixed: return "mixed";
  }
  return "?";
}

bool Block::has_min() const {
  return kind == BlockKind::closed || kind == BlockKind::left_closed || kind == BlockKind::point ||
         kind == BlockKind::finite_chain;
}

bool Block::has_max() const {
  return kind == BlockKind::closed || kind == BlockKind::right_closed || kind == BlockKind::point ||
         kind == BlockKind::finite_chain;
}

bool Block::is_interval() const {
  return kind != BlockKind::point && kind != BlockKind::finite_chain;
}

BlockSpace::BlockSpace(std::vector<Block> blocks, Tournament gamma, std::vector<bool> reversed)
    : blocks_(std::move(blocks)), gamma_(std::move(gamma)), reversed_(std::move(reversed)) {
  if (blocks_.empty()) throw Error(ErrorCode::size_mismatch, "a block space needs a block");
  if (gamma_.size() != size()) throw Error(ErrorCode::size_mismatch, "gamma size differs from block count");
  if (reversed_.empty()) reversed_.assign(blocks_.size(), false);
  if (static_cast<int>(reversed_.size()) != size()) {
    throw Error(ErrorCode::size_mismatch, "one orientation flag per block");
  }
  for (const Block& b : blocks_) {
    if (b.kind == BlockKind::finite_chain && b.chain_length < 2) {
      throw Error(ErrorCode::parse_error, "finite_chain needs at least 2 points");
    }
  }
}

bool BlockSpace::top_present(int i) const {
  return reversed_[i] ? blocks_[i].has_min() : blocks_[i].has_max();
}

bool BlockSpace::bottom_present(int i) const {
  return reversed_[i] ? blocks_[i].has_max() : blocks_[i].has_min();
}

namespace {

bool qualifies(Qualifier q, bool is_block_max) {
  return q == Qualifier::every_point || (q == Qualifier::block_max && is_block_max);
}

PointSet blocks_with(const std::vector<Qualifier>& qs) {
  PointSet s;
  for (int i = 0; i < static_cast<int>(qs.size()); ++i) {
    if (qs[i] != Qualifier::none) s.insert(i);
  }
  return s;
}

}  // namespace

bool SymbolicKingReport::has_quasi_king() const { return !quasi_king_blocks().empty(); }
bool SymbolicKingReport::has_king() const { return !king_blocks().empty(); }
PointSet SymbolicKingReport::quasi_king_blocks() const { return blocks_with(quasi_king); }
PointSet SymbolicKingReport::king_blocks() const { return blocks_with(king); }

bool SymbolicKingReport::is_quasi_king(int block, bool is_block_max) const {
  return qualifies(quasi_king[block], is_block_max);
}

bool SymbolicKingReport::is_king(int block, bool is_block_max) const {
  return qualifies(king[block], is_block_max);
}

SymbolicKingReport symbolic_king_report(const BlockSpace& bs) {
  const Tournament& gamma = bs.gamma();
  const RelationTriple rel = relation_closures(gamma);
  const int k = bs.size();

  SymbolicKingReport r;
  r.block_condensation = condensation(gamma);
  r.quasi_king.assign(k, Qualifier::none);
  r.king.assign(k, Qualifier::none);

  for (int d = 0; d < k; ++d) {
    // A chain from another block can enter d at any point, so outside points
    // only need a γ-path into d. Points of d itself either leave and come
    // back around a γ-cycle, or climb d's own order.
    const bool reached = rel.lll.column(d) == gamma.ground();
    bool on_cycle = false;
    for (PointSet cls : r.block_condensation) {
      if (cls.contains(d)) on_cycle = cls.size() >= 2;
    }
    if (reached) {
      if (on_cycle) {
        r.quasi_king[d] = Qualifier::every_point;
      } else if (bs.top_present(d)) {
        r.quasi_king[d] = Qualifier::block_max;
      }
    }
    // One intermediate point cannot leave d and return (γ is antisymmetric),
    // so a king must be d's largest point, and other blocks need a γ-path of
    // length <= 2.
    const bool reached_in_two = rel.ll.column(d) == gamma.ground();
    if (reached_in_two && bs.top_present(d)) r.king[d] = Qualifier::block_max;

    if ((gamma.below(d) | PointSet::single(d)) == gamma.ground() && bs.top_present(d)) {
      r.emperor_block = d;
    }
  }

  r.witness_paths.resize(k);
  if (const PointSet qk = r.quasi_king_blocks(); !qk.empty()) {
    for (int g = 0; g < k; ++g) {
      if (auto path = witness_chain(gamma, g, qk.first())) r.witness_paths[g] = *path;
    }
  }
  return r;
}

Skeleton finite_skeleton(const BlockSpace& bs, int density) {
  if (density < 3) throw Error(ErrorCode::size_limit, "skeleton density must be >= 3");
  Skeleton sk;
  PartitionedSelection ps{{}, bs.gamma(), {}};
  int next = 0;
  for (int b = 0; b < bs.size(); ++b) {
    const Block& block = bs.block(b);
    const int m = block.kind == BlockKind::point          ? 1
                  : block.kind == BlockKind::finite_chain ? block.chain_length
                                                          : density;
    if (next + m > kMaxPoints) throw Error(ErrorCode::size_limit, "skeleton exceeds 64 points");
    PointSet part;
    for (int r = 0; r < m; ++r) {
      part.insert(next + r);
      SkeletonSample s;
      s.block = b;
      s.rank = r;
      s.is_bottom = r == 0;
      s.is_top = r == m - 1;
      s.true_bottom = s.is_bottom && bs.bottom_present(b);
      s.true_top = s.is_top && bs.top_present(b);
      sk.samples.push_back(s);
    }
    next += m;
    ps.parts.push_back(part);
    ps.etas.push_back(Tournament::chain(m));
  }
  sk.t = lexsum(ps);
  return sk;
}

SkeletonAgreement skeleton_agreement(const BlockSpace& bs, int density) {
  const Skeleton sk = finite_skeleton(bs, density);
  const KingReport oracle = king_report(sk.t);
  const SymbolicKingReport symbolic = symbolic_king_report(bs);

  std::vector<int> first_sample(bs.size(), -1);
  for (int i = static_cast<int>(sk.samples.size()) - 1; i >= 0; --i) {
    first_sample[sk.samples[i].block] = i;
  }

  SkeletonAgreement out;
  auto fail = [&](std::string what) {
    if (out.agrees) {
      out.agrees = false;
      out.mismatch = std::move(what);
    }
  };

  for (int i = 0; i < static_cast<int>(sk.samples.size()); ++i) {
    const SkeletonSample& s = sk.samples[i];
    const bool generic_extreme = (s.is_top && !s.true_top) || (s.is_bottom && !s.true_bottom);
    // Stand-ins for missing endpoints behave like any interior point.
    const int ref = generic_extreme ? first_sample[s.block] + 1 : i;
    const bool is_max = s.is_top && s.true_top;
    const std::string where = "block " + std::to_string(s.block) + " rank " + std::to_string(s.rank);
    if (oracle.quasi_kings.contains(ref) != symbolic.is_quasi_king(s.block, is_max)) {
      fail("quasi-king status differs at " + where);
    }
    if (oracle.kings.contains(ref) != symbolic.is_king(s.block, is_max)) {
      fail("king status differs at " + where);
    }
  }

  std::optional<int> oracle_emperor;
  if (oracle.emperor && sk.samples[*oracle.emperor].true_top) {
    oracle_emperor = sk.samples[*oracle.emperor].block;
  }
  if (oracle_emperor != symbolic.emperor_block) fail("emperor differs");
  return out;
}

std::vector<int> glued_order(const BlockSpace& bs) {
  if (!bs.gamma().is_transitive()) {
    throw Error(ErrorCode::non_linear_gamma, "gamma must be a linear order on blocks");
  }
  std::vector<int> order(bs.size());
  for (int b = 0; b < bs.size(); ++b) order[bs.gamma().below(b).size()] = b;
  return order;
}

std::vector<CutKind> cut_kinds(const BlockSpace& bs) {
  const std::vector<int> order = glued_order(bs);
  std::vector<CutKind> cuts;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const bool left = bs.top_present(order[i]);
    const bool right = bs.bottom_present(order[i + 1]);
    cuts.push_back(left && right ? CutKind::jump : (!left && !right ? CutKind::gap : CutKind::mixed));
  }
  return cuts;
}

bool is_order_compact(const BlockSpace& bs) {
  const std::vector<int> order = glued_order(bs);
  if (!bs.bottom_present(order.front()) || !bs.top_present(order.back())) return false;
  for (CutKind c : cut_kinds(bs)) {
    if (c == CutKind::gap) return false;
  }
  return true;
}

std::vector<PointSet> block_components(const BlockSpace& bs) {
  const std::vector<int> order = glued_order(bs);
  const std::vector<CutKind> cuts = cut_kinds(bs);
  std::vector<PointSet> comps{PointSet::single(order.front())};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] == CutKind::mixed) {
      comps.back().insert(order[i + 1]);
    } else {
      comps.push_back(PointSet::single(order[i + 1]));
    }
  }
  return comps;
}

Tournament decomposition_tournament(const BlockSpace& bs) {
  const std::vector<PointSet> comps = block_components(bs);
  const int k = static_cast<int>(comps.size());
  std::vector<PointSet> above(k);
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      if (c == d) continue;
      bool all_below = true;
      bool any_below = false;
      for (int b : comps[c]) {
        for (int e : comps[d]) {
          const bool less = bs.gamma().less(b, e);
          all_below = all_below && less;
          any_below = any_below || less;
        }
      }
      if (any_below != all_below) {
        throw Error(ErrorCode::internal_invariant_violation,
                    "components " + std::to_string(c) + " and " + std::to_string(d) +
                        " are not comparable pointwise");
      }
      if (all_below) above[c].insert(d);
    }
  }
  return Tournament::from_above_sets(std::move(above));
}

ClopenWitness lower_clopen_witness(const BlockSpace& bs, int component) {
  const std::vector<int> order = glued_order(bs);
  const std::vector<PointSet> comps = block_components(bs);
  if (component < 0 || component >= static_cast<int>(comps.size())) {
    throw Error(ErrorCode::out_of_range_point, "component " + std::to_string(component));
  }
  const PointSet z = comps[component];
  int last_pos = 0;
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    if (z.contains(order[pos])) last_pos = pos;
  }
  if (bs.top_present(order[last_pos])) {
    throw Error(ErrorCode::component_has_max, "component " + std::to_string(component));
  }

  ClopenWitness w;
  w.component = z;
  for (int pos = 0; pos <= last_pos; ++pos) w.y_blocks.insert(order[pos]);
  w.rest_below_component = true;
  for (int b : w.y_blocks - z) {
    for (int d : z) w.rest_below_component = w.rest_below_component && bs.gamma().less(b, d);
  }
  const std::vector<CutKind> cuts = cut_kinds(bs);
  if (last_pos < static_cast<int>(cuts.size())) w.upper_cut = cuts[last_pos];
  // Y is an initial segment without a largest point; it is closed unless the
  // complement starts with a least point (a mixed cut).
  w.clopen = !w.upper_cut || *w.upper_cut != CutKind::mixed;
  return w;
}

bool block_quasi_king_space(const BlockSpace& bs, Exec exec) {
  const int k = bs.size();
  if (k > kMaxFamilyBlocks) {
    throw Error(ErrorCode::size_limit,
                "family sweep needs <= " + std::to_string(kMaxFamilyBlocks) + " blocks");
  }
  const std::size_t orientations = std::size_t{1} << k;
  const std::size_t gammas = std::size_t{1} << (k * (k - 1) / 2);
  const auto without_quasi_king = find_first(gammas * orientations, exec, [&](std::size_t i) {
    std::vector<bool> reversed(k);
    for (int b = 0; b < k; ++b) reversed[b] = ((i % orientations) >> b) & 1U;
    const BlockSpace member(bs.blocks(), Tournament::from_code(k, i / orientations),
                            std::move(reversed));
    return !symbolic_king_report(member).has_quasi_king();
  });
  return !without_quasi_king.has_value();
}

}  // namespace wsel
