#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "wsel/blockspace.hpp"
#include "wsel/error.hpp"

using namespace wsel;

namespace {

Block blk(BlockKind k, int len = 2) { return Block{k, len}; }

Tournament three_cycle() {
  return Tournament::from_pairs(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
}

BlockSpace linear(std::vector<Block> blocks, std::vector<bool> reversed = {}) {
  const int k = static_cast<int>(blocks.size());
  return BlockSpace(std::move(blocks), Tournament::chain(k), std::move(reversed));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal_invariant_violation;
}

// ---- independent sampled model ----
//
// Every interval block is replaced by five points in ≤σ order. The real
// block's ≤σ-top exists only when the block carries that endpoint; the
// middle sample stands for a generic point.
struct Sample {
  int block;
  int rank;
  int count;
};

struct Sampled {
  Tournament t;
  std::vector<Sample> samples;
};

constexpr int kDensity = 5;

Sampled sample(const BlockSpace& bs) {
  Sampled s;
  for (int b = 0; b < bs.size(); ++b) {
    const Block& block = bs.block(b);
    const int count = block.kind == BlockKind::point          ? 1
                      : block.kind == BlockKind::finite_chain ? block.chain_length
                                                              : kDensity;
    for (int r = 0; r < count; ++r) s.samples.push_back({b, r, count});
  }
  const int n = static_cast<int>(s.samples.size());
  std::vector<PointSet> above(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Sample& a = s.samples[x];
      const Sample& c = s.samples[y];
      const bool less = a.block == c.block ? a.rank < c.rank : bs.gamma().less(a.block, c.block);
      if (less) above[x].insert(y);
    }
  }
  s.t = Tournament::from_above_sets(std::move(above));
  return s;
}

struct Expected {
  std::vector<Qualifier> quasi_king;
  std::vector<Qualifier> king;
  std::optional<int> emperor_block;
  std::string problem;
};

Qualifier qualifier_from(const BlockSpace& bs, int b, const Sampled& s, std::uint64_t members,
                         std::string& problem) {
  std::vector<bool> status;
  for (int x = 0; x < static_cast<int>(s.samples.size()); ++x)
    if (s.samples[x].block == b) status.push_back((members >> x) & 1);
  const bool top = status.back();
  if (bs.block(b).is_interval()) {
    const bool generic = status[kDensity / 2];
    if (status.front() != generic) problem += "bottom differs from generic; ";
    if (generic && bs.top_present(b) && !top) problem += "generic without top; ";
    if (generic) return Qualifier::every_point;
    return bs.top_present(b) && top ? Qualifier::block_max : Qualifier::none;
  }
  bool all = true;
  for (std::size_t i = 0; i + 1 < status.size(); ++i) {
    all = all && status[i];
    if (status[i] != status.front()) problem += "non-top points disagree; ";
  }
  if (all && top) return Qualifier::every_point;
  if (top) return Qualifier::block_max;
  if (!status.front() || status.size() == 1) return Qualifier::none;
  problem += "non-top without top; ";
  return Qualifier::none;
}

Expected expected_report(const BlockSpace& bs) {
  const Sampled s = sample(bs);
  const oracle::Kings k = oracle::kings(s.t);
  Expected e;
  for (int b = 0; b < bs.size(); ++b) {
    e.quasi_king.push_back(qualifier_from(bs, b, s, k.quasi_kings, e.problem));
    e.king.push_back(qualifier_from(bs, b, s, k.kings, e.problem));
  }
  if (k.emperor) {
    const Sample& top = s.samples[*k.emperor];
    const bool real = !bs.block(top.block).is_interval() || bs.top_present(top.block);
    if (real) e.emperor_block = top.block;
  }
  return e;
}

// On a one-point block "every point" and "the block max" say the same thing.
std::vector<Qualifier> normalized(const BlockSpace& bs, std::vector<Qualifier> qs) {
  for (int b = 0; b < bs.size(); ++b)
    if (bs.block(b).kind == BlockKind::point && qs[b] == Qualifier::every_point) qs[b] = Qualifier::block_max;
  return qs;
}

std::string describe(const BlockSpace& bs) {
  std::string out;
  for (int b = 0; b < bs.size(); ++b) {
    out += std::string(to_string(bs.block(b).kind)) + (bs.reversed()[b] ? "* " : " ");
  }
  return out + "gamma " + std::to_string(bs.gamma().code());
}

// Every block space with k blocks: kinds × γ codes × orientation flags.
template <class F>
void for_all_spaces(int k, F&& f) {
  const int kinds = static_cast<int>(std::size(kAllBlockKinds));
  int tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= kinds;
  for (int tuple = 0; tuple < tuples; ++tuple) {
    std::vector<Block> blocks;
    for (int i = 0, rest = tuple; i < k; ++i, rest /= kinds) blocks.push_back(blk(kAllBlockKinds[rest % kinds]));
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << (k * (k - 1) / 2)); ++g)
      for (std::uint64_t o = 0; o < (std::uint64_t{1} << k); ++o) {
        std::vector<bool> rev(k);
        for (int i = 0; i < k; ++i) rev[i] = (o >> i) & 1;
        f(BlockSpace(blocks, Tournament::from_code(k, g), rev));
      }
  }
}

}  // namespace

TEST(BlockSpace, ThreeOpenBlocksOnACycle) {
  const BlockSpace bs({blk(BlockKind::open), blk(BlockKind::open), blk(BlockKind::open)}, three_cycle());
  const SymbolicKingReport r = symbolic_king_report(bs);
  EXPECT_EQ(r.quasi_king, std::vector<Qualifier>(3, Qualifier::every_point));
  EXPECT_EQ(r.king, std::vector<Qualifier>(3, Qualifier::none));
  EXPECT_FALSE(r.has_king());
  EXPECT_FALSE(r.emperor_block);
  for (int b = 0; b < 3; ++b) {
    EXPECT_TRUE(r.is_quasi_king(b, false));
    EXPECT_FALSE(r.is_king(b, true));
  }
  EXPECT_TRUE(skeleton_agreement(bs, 3).agrees);
}

TEST(BlockSpace, ClosedBelowClosed) {
  const SymbolicKingReport r = symbolic_king_report(linear({blk(BlockKind::closed), blk(BlockKind::closed)}));
  EXPECT_EQ(r.emperor_block, 1);
  EXPECT_EQ(r.quasi_king, (std::vector<Qualifier>{Qualifier::none, Qualifier::block_max}));
  EXPECT_EQ(r.king, r.quasi_king);
  EXPECT_FALSE(r.is_quasi_king(1, false));
  EXPECT_TRUE(r.is_king(1, true));
}

TEST(BlockSpace, OpenTopBlockHasNoQuasiKing) {
  const SymbolicKingReport r = symbolic_king_report(linear({blk(BlockKind::closed), blk(BlockKind::open)}));
  EXPECT_FALSE(r.has_quasi_king());
  EXPECT_FALSE(r.emperor_block);
  // Reversing the open block changes nothing; reversing a half-open one does.
  EXPECT_FALSE(symbolic_king_report(linear({blk(BlockKind::closed), blk(BlockKind::open)}, {false, true}))
                   .has_quasi_king());
  EXPECT_TRUE(symbolic_king_report(linear({blk(BlockKind::closed), blk(BlockKind::left_closed)}, {false, true}))
                  .has_quasi_king());
}

TEST(BlockSpace, WitnessPathsEndInQuasiKingBlock) {
  const BlockSpace bs({blk(BlockKind::open), blk(BlockKind::closed), blk(BlockKind::point)},
                      Tournament::from_pairs(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}));
  const SymbolicKingReport r = symbolic_king_report(bs);
  EXPECT_EQ(r.quasi_king_blocks(), PointSet{2});
  EXPECT_EQ(r.emperor_block, 2);
  for (int g = 0; g < 3; ++g) {
    ASSERT_FALSE(r.witness_paths[g].empty());
    EXPECT_EQ(r.witness_paths[g].front(), g);
    EXPECT_EQ(r.witness_paths[g].back(), 2);
  }
}

TEST(BlockSpace, SkeletonBasics) {
  const Skeleton s = finite_skeleton(linear({blk(BlockKind::closed)}), 3);
  const KingReport r = king_report(s.t);
  ASSERT_TRUE(r.emperor);
  EXPECT_TRUE(s.samples[*r.emperor].true_top);
  EXPECT_THROW(finite_skeleton(linear({blk(BlockKind::closed)}), 2), Error);
  std::vector<Block> many(22, blk(BlockKind::open));
  EXPECT_THROW(finite_skeleton(BlockSpace(many, Tournament::chain(22)), 3), Error);
}

// The symbolic rules against the sampled model for every space with at
// most three blocks, plus the library's own skeleton cross-check.
TEST(BlockSpace, SymbolicMatchesSampledModel) {
  std::size_t spaces = 0;
  for (int k = 1; k <= 3; ++k) {
    for_all_spaces(k, [&](const BlockSpace& bs) {
      const Expected e = expected_report(bs);
      const SymbolicKingReport r = symbolic_king_report(bs);
      ASSERT_TRUE(e.problem.empty()) << describe(bs) << ": " << e.problem;
      ASSERT_EQ(normalized(bs, r.quasi_king), normalized(bs, e.quasi_king)) << describe(bs);
      ASSERT_EQ(normalized(bs, r.king), normalized(bs, e.king)) << describe(bs);
      ASSERT_EQ(r.emperor_block, e.emperor_block) << describe(bs);
      ASSERT_TRUE(skeleton_agreement(bs, 3).agrees) << describe(bs);
      ++spaces;
    });
  }
  EXPECT_EQ(spaces, 6U * 2 + 36U * 2 * 4 + 216U * 8 * 8);
}

TEST(BlockSpace, LongerChainsAgree) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Block> blocks;
    std::vector<bool> rev;
    for (int i = 0; i < k; ++i) {
      blocks.push_back(blk(kAllBlockKinds[rng() % 6], 2 + static_cast<int>(rng() % 4)));
      rev.push_back(rng() & 1);
    }
    const BlockSpace bs(blocks, Tournament::from_code(k, rng() % (1U << (k * (k - 1) / 2))), rev);
    const Expected e = expected_report(bs);
    const SymbolicKingReport r = symbolic_king_report(bs);
    ASSERT_TRUE(e.problem.empty()) << describe(bs);
    EXPECT_EQ(normalized(bs, r.quasi_king), normalized(bs, e.quasi_king)) << describe(bs);
    EXPECT_EQ(normalized(bs, r.king), normalized(bs, e.king)) << describe(bs);
    EXPECT_EQ(r.emperor_block, e.emperor_block) << describe(bs);
  }
}

TEST(GluedOrder, Compactness) {
  EXPECT_TRUE(is_order_compact(linear({blk(BlockKind::closed)})));
  EXPECT_FALSE(is_order_compact(linear({blk(BlockKind::open)})));
  EXPECT_TRUE(is_order_compact(linear({blk(BlockKind::closed), blk(BlockKind::open), blk(BlockKind::closed)})));
  EXPECT_FALSE(is_order_compact(linear({blk(BlockKind::right_closed), blk(BlockKind::closed)})));
  EXPECT_TRUE(is_order_compact(linear({blk(BlockKind::right_closed), blk(BlockKind::closed)}, {true, false})));
  EXPECT_FALSE(is_order_compact(linear({blk(BlockKind::closed), blk(BlockKind::left_closed)})));
  EXPECT_TRUE(is_order_compact(linear({blk(BlockKind::point), blk(BlockKind::finite_chain, 4)})));
}

TEST(GluedOrder, GammaOrderAndErrors) {
  // γ: 2 < 0 < 1.
  const BlockSpace bs({blk(BlockKind::closed), blk(BlockKind::open), blk(BlockKind::point)},
                      Tournament::from_pairs(3, std::vector<std::pair<int, int>>{{2, 0}, {0, 1}, {2, 1}}));
  EXPECT_EQ(glued_order(bs), (std::vector<int>{2, 0, 1}));
  const BlockSpace cyclic({blk(BlockKind::open), blk(BlockKind::open), blk(BlockKind::open)}, three_cycle());
  EXPECT_EQ(code_of([&] { glued_order(cyclic); }), ErrorCode::non_linear_gamma);
  EXPECT_EQ(code_of([&] { is_order_compact(cyclic); }), ErrorCode::non_linear_gamma);
  EXPECT_EQ(code_of([&] { block_components(cyclic); }), ErrorCode::non_linear_gamma);
  EXPECT_EQ(code_of([&] { decomposition_tournament(cyclic); }), ErrorCode::non_linear_gamma);
}

TEST(GluedOrder, CutsAndComponents) {
  const auto cc = linear({blk(BlockKind::closed), blk(BlockKind::closed)});
  EXPECT_EQ(cut_kinds(cc), std::vector<CutKind>{CutKind::jump});
  EXPECT_EQ(block_components(cc), (std::vector<PointSet>{PointSet{0}, PointSet{1}}));
  const auto oo = linear({blk(BlockKind::open), blk(BlockKind::open)});
  EXPECT_EQ(cut_kinds(oo), std::vector<CutKind>{CutKind::gap});
  EXPECT_EQ(block_components(oo).size(), 2U);
  const auto co = linear({blk(BlockKind::closed), blk(BlockKind::open)});
  EXPECT_EQ(cut_kinds(co), std::vector<CutKind>{CutKind::mixed});
  EXPECT_EQ(block_components(co), (std::vector<PointSet>{PointSet{0, 1}}));
}

TEST(GluedOrder, DecompositionTournament) {
  for (int k = 1; k <= 5; ++k) {
    const Tournament d = decomposition_tournament(linear(std::vector<Block>(k, blk(BlockKind::closed))));
    EXPECT_EQ(d, Tournament::chain(k));
    EXPECT_TRUE(king_report(d).emperor);
  }
  const auto coc = linear({blk(BlockKind::closed), blk(BlockKind::open), blk(BlockKind::closed)});
  EXPECT_EQ(block_components(coc).size(), 1U);
  EXPECT_EQ(decomposition_tournament(coc), Tournament());
  // Reversed γ reverses the decomposition chain's labels, not its shape.
  const BlockSpace down({blk(BlockKind::closed), blk(BlockKind::open), blk(BlockKind::open)},
                        Tournament::chain(3).reversed());
  const Tournament d = decomposition_tournament(down);
  EXPECT_TRUE(d.is_transitive());
  EXPECT_EQ(d.size(), static_cast<int>(block_components(down).size()));
}

TEST(GluedOrder, LowerClopenWitness) {
  const auto co = linear({blk(BlockKind::closed), blk(BlockKind::open)});
  const ClopenWitness whole = lower_clopen_witness(co, 0);
  EXPECT_EQ(whole.y_blocks, (PointSet{0, 1}));
  EXPECT_TRUE(whole.clopen);
  EXPECT_FALSE(whole.upper_cut);

  const auto oo = linear({blk(BlockKind::open), blk(BlockKind::open)});
  const ClopenWitness first = lower_clopen_witness(oo, 0);
  EXPECT_EQ(first.component, PointSet{0});
  EXPECT_EQ(first.y_blocks, PointSet{0});
  EXPECT_TRUE(first.rest_below_component);
  EXPECT_TRUE(first.clopen);
  EXPECT_EQ(first.upper_cut, CutKind::gap);

  const auto ocl = linear({blk(BlockKind::closed), blk(BlockKind::left_closed), blk(BlockKind::open)});
  const ClopenWitness mid = lower_clopen_witness(ocl, 1);
  EXPECT_EQ(mid.y_blocks, (PointSet{0, 1}));
  EXPECT_TRUE(mid.rest_below_component);
  EXPECT_TRUE(mid.clopen);

  EXPECT_EQ(code_of([] { lower_clopen_witness(linear({blk(BlockKind::closed), blk(BlockKind::closed)}), 0); }),
            ErrorCode::component_has_max);
  EXPECT_EQ(code_of([&] { lower_clopen_witness(oo, 5); }), ErrorCode::out_of_range_point);
}

TEST(Family, Examples) {
  EXPECT_TRUE(block_quasi_king_space(linear({blk(BlockKind::closed)})));
  EXPECT_FALSE(block_quasi_king_space(linear({blk(BlockKind::open)})));
  EXPECT_TRUE(block_quasi_king_space(
      BlockSpace({blk(BlockKind::closed), blk(BlockKind::closed), blk(BlockKind::closed)}, three_cycle())));
  EXPECT_FALSE(block_quasi_king_space(linear({blk(BlockKind::closed), blk(BlockKind::left_closed)})));
  std::vector<Block> seven(7, blk(BlockKind::closed));
  EXPECT_EQ(code_of([&] { block_quasi_king_space(BlockSpace(seven, Tournament::chain(7))); }),
            ErrorCode::size_limit);
}

// The family property holds exactly when every block has both endpoints,
// and on linear γ it sits between compactness and quasi-king existence.
TEST(Family, ImplicationsOnSmallSpaces) {
  for (int k = 1; k <= 3; ++k) {
    for_all_spaces(k, [](const BlockSpace& bs) {
      bool both_ends = true;
      for (const Block& b : bs.blocks()) both_ends = both_ends && b.has_min() && b.has_max();
      const bool family = block_quasi_king_space(bs, Exec::serial);
      ASSERT_EQ(family, both_ends) << describe(bs);
      const SymbolicKingReport r = symbolic_king_report(bs);
      if (family) EXPECT_TRUE(r.has_quasi_king());
      if (!bs.gamma().is_transitive()) return;
      const bool compact = is_order_compact(bs);
      if (family) EXPECT_TRUE(compact) << describe(bs);
      if (compact) EXPECT_TRUE(r.has_quasi_king()) << describe(bs);
      const int top = glued_order(bs).back();
      if (!bs.top_present(top)) EXPECT_FALSE(r.has_quasi_king()) << describe(bs);
    });
  }
}

TEST(BlockSpace, KindNames) {
  for (BlockKind k : kAllBlockKinds) EXPECT_EQ(block_kind_from_string(to_string(k)), k);
  EXPECT_EQ(code_of([] { block_kind_from_string("half_open"); }), ErrorCode::parse_error);
  EXPECT_THROW(BlockSpace({blk(BlockKind::open)}, Tournament::chain(2)), Error);
  EXPECT_THROW(BlockSpace({blk(BlockKind::finite_chain, 1)}, Tournament()), Error);
}
