#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wsel/enumerate.hpp"
#include "wsel/error.hpp"
#include "wsel/lexsum.hpp"

using namespace wsel;

namespace {

Tournament three_cycle() {
  return Tournament::from_pairs(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
}

// Random partition of {0..n-1} into k nonempty parts, labels shuffled.
std::vector<PointSet> random_parts(int n, int k, std::mt19937_64& rng) {
  std::vector<int> owner(n);
  for (int i = 0; i < n; ++i) owner[i] = i < k ? i : static_cast<int>(rng() % k);
  std::shuffle(owner.begin(), owner.end(), rng);
  std::vector<PointSet> parts(k);
  for (int i = 0; i < n; ++i) parts[owner[i]].insert(i);
  return parts;
}

PartitionedSelection random_partitioned(int n, int k, std::mt19937_64& rng) {
  PartitionedSelection p;
  p.parts = random_parts(n, k, rng);
  p.gamma = random_tournament(k, rng);
  for (PointSet part : p.parts) p.etas.push_back(random_tournament(part.size(), rng));
  return p;
}

// Pointwise definition of the sum.
bool sum_less(const PartitionedSelection& p, int x, int y) {
  int px = -1, py = -1, lx = 0, ly = 0;
  for (int i = 0; i < static_cast<int>(p.parts.size()); ++i) {
    const std::vector<int> pts = p.parts[i].to_vector();
    for (int l = 0; l < static_cast<int>(pts.size()); ++l) {
      if (pts[l] == x) px = i, lx = l;
      if (pts[l] == y) py = i, ly = l;
    }
  }
  return px == py ? p.etas[px].less(lx, ly) : p.gamma.less(px, py);
}

}  // namespace

TEST(Lexsum, SingletonPartsRecoverGamma) {
  PartitionedSelection p{{PointSet{0}, PointSet{1}, PointSet{2}}, three_cycle(),
                         {Tournament(), Tournament(), Tournament()}};
  EXPECT_EQ(lexsum(p), three_cycle());
}

TEST(Lexsum, OnePartIsEta) {
  const PartitionedSelection p{{PointSet::full(3)}, Tournament(), {three_cycle()}};
  EXPECT_EQ(lexsum(p), three_cycle());
}

TEST(Lexsum, ChainsOfChains) {
  const PartitionedSelection p{{PointSet{0, 1}, PointSet{2, 3}}, Tournament::chain(2),
                               {Tournament::chain(2), Tournament::chain(2)}};
  EXPECT_EQ(lexsum(p), Tournament::chain(4));
}

TEST(Lexsum, MatchesPointwiseDefinition) {
  std::mt19937_64 rng(case_seed(4, 0));
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % n);
    const PartitionedSelection p = random_partitioned(n, k, rng);
    const Tournament t = lexsum(p);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) ASSERT_EQ(t.less(x, y), sum_less(p, x, y));
  }
}

TEST(Lexsum, ValidationErrors) {
  const auto code = [](const PartitionedSelection& p) {
    try {
      validate(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal_invariant_violation;
  };
  const Tournament one;
  const Tournament two = Tournament::chain(2);
  EXPECT_EQ(code({{PointSet{0, 1}, PointSet{1}}, two, {two, one}}), ErrorCode::partition_invalid);
  EXPECT_EQ(code({{PointSet{0}, PointSet{2}}, two, {one, one}}), ErrorCode::partition_invalid);
  EXPECT_EQ(code({{PointSet{0}, PointSet{1}}, two, {two, one}}), ErrorCode::partition_invalid);
  EXPECT_EQ(code({{PointSet{0}, PointSet{1}}, Tournament::chain(3), {one, one}}), ErrorCode::partition_invalid);
  EXPECT_EQ(code({{PointSet{}, PointSet{0}}, two, {one, one}}), ErrorCode::partition_invalid);
  EXPECT_EQ(code({{PointSet{0}, PointSet{1}}, two, {one, one}}), ErrorCode::internal_invariant_violation);
}

// Summing part {A, B} first and then with C equals the flat three-part sum
// whenever A and B face C the same way.
TEST(Lexsum, AssociativeByParts) {
  std::mt19937_64 rng(case_seed(4, 1));
  for (int round = 0; round < 200; ++round) {
    const int n = 3 + static_cast<int>(rng() % 8);
    PartitionedSelection flat = random_partitioned(n, 3, rng);
    if (flat.gamma.less(0, 2) != flat.gamma.less(1, 2)) flat.gamma = flat.gamma.reversed();
    if (flat.gamma.less(0, 2) != flat.gamma.less(1, 2)) continue;
    const PointSet ab = flat.parts[0] | flat.parts[1];
    // Local labels of A and B inside AB.
    PartitionedSelection inner;
    for (int i = 0; i < 2; ++i) {
      PointSet local;
      int idx = 0;
      for (int x : ab) {
        if (flat.parts[i].contains(x)) local.insert(idx);
        ++idx;
      }
      inner.parts.push_back(local);
      inner.etas.push_back(flat.etas[i]);
    }
    inner.gamma = flat.gamma.induced(PointSet{0, 1});
    const Tournament ab_eta = lexsum(inner);
    const Tournament outer_gamma = flat.gamma.less(0, 2) ? Tournament::chain(2) : Tournament::chain(2).reversed();
    const PartitionedSelection nested{{ab, flat.parts[2]}, outer_gamma, {ab_eta, flat.etas[2]}};
    EXPECT_EQ(lexsum(nested), lexsum(flat));
  }
}

// With strongly connected summands every condensation class is a union of
// parts; a cyclic γ then makes the whole sum one class.
TEST(Lexsum, CondensationRespectsStronglyConnectedParts) {
  std::mt19937_64 rng(case_seed(4, 2));
  int cyclic_seen = 0;
  for (int round = 0; round < 2000; ++round) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % n);
    PartitionedSelection p = random_partitioned(n, k, rng);
    bool strong = true;
    for (const Tournament& eta : p.etas) strong = strong && condensation(eta).size() == 1;
    if (!strong) continue;
    const auto classes = condensation(lexsum(p));
    for (PointSet c : classes)
      for (PointSet part : p.parts) EXPECT_TRUE(part.subset_of(c) || !part.intersects(c));
    if (condensation(p.gamma).size() == 1) {
      ++cyclic_seen;
      EXPECT_EQ(classes.size(), 1U);
    }
  }
  EXPECT_GT(cyclic_seen, 10);
}

TEST(LexsumContinuity, DiscretePartsPass) {
  const PartitionedSelection p{{PointSet{0, 2}, PointSet{1}}, Tournament::chain(2),
                               {Tournament::chain(2), Tournament()}};
  const std::vector<FiniteTopology> tops{FiniteTopology::discrete(2), FiniteTopology::discrete(1)};
  const LexsumContinuityReport r = check_lexsum_continuity(p, tops);
  EXPECT_TRUE(r.summands_separately && r.sum_separately);
  EXPECT_TRUE(r.summands_vietoris && r.sum_vietoris);
  EXPECT_TRUE(r.ok());
}

TEST(LexsumContinuity, VacuousWhenSummandFails) {
  const PartitionedSelection p{{PointSet{0, 1}, PointSet{2}}, Tournament::chain(2),
                               {Tournament::chain(2), Tournament()}};
  const std::vector<FiniteTopology> tops{FiniteTopology::indiscrete(2), FiniteTopology::discrete(1)};
  const LexsumContinuityReport r = check_lexsum_continuity(p, tops);
  EXPECT_FALSE(r.summands_separately);
  EXPECT_TRUE(r.separate_clause_holds());
  EXPECT_TRUE(r.ok());
}

// Two-part splits of n <= 5 points with parts of size <= 3, every γ, η and
// part topology; fields checked against the open-set oracle.
TEST(LexsumContinuity, ExhaustiveSmallSplits) {
  std::size_t cases = 0;
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      if (!(mask & 1)) continue;  // part 0 holds point 0
      const PointSet a = PointSet::from_bits(mask);
      const PointSet b = PointSet::full(n) - a;
      if (a.size() > 3 || b.size() > 3) continue;
      const auto tops_a = enumerate_topologies(a.size());
      const auto tops_b = enumerate_topologies(b.size());
      for (const Tournament& gamma : {Tournament::chain(2), Tournament::chain(2).reversed()}) {
        enumerate_tournaments(a.size(), false, [&](const Tournament& ea) {
          enumerate_tournaments(b.size(), false, [&](const Tournament& eb) {
            const PartitionedSelection p{{a, b}, gamma, {ea, eb}};
            const Tournament sum = lexsum(p);
            for (const auto& ta : tops_a) {
              for (const auto& tb : tops_b) {
                const std::vector<FiniteTopology> tops{ta, tb};
                const LexsumContinuityReport r = check_lexsum_continuity(p, tops);
                const auto oa = oracle::opens_of(ta);
                const auto ob = oracle::opens_of(tb);
                const auto os = oracle::opens_of(sum_topology(p.parts, tops));
                ASSERT_EQ(r.summands_separately, oracle::separately(ea, oa) && oracle::separately(eb, ob));
                ASSERT_EQ(r.summands_vietoris, oracle::vietoris(ea, oa) && oracle::vietoris(eb, ob));
                ASSERT_EQ(r.sum_separately, oracle::separately(sum, os));
                ASSERT_EQ(r.sum_vietoris, oracle::vietoris(sum, os));
                EXPECT_TRUE(r.ok());
                ++cases;
              }
            }
          });
        });
      }
    }
  }
  EXPECT_GT(cases, 1000U);
}
