#pragma once

// Symbolic infinite spaces: a finite list of interval-type blocks glued by a
// block tournament γ. Inside a block the selection is the standard
// min-selection (or its reverse), so ≤σ is the block's order; across blocks
// it follows γ.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsel/parallel.hpp"
#include "wsel/point_set.hpp"
#include "wsel/tournament.hpp"

namespace wsel {

enum class BlockKind {
  open,          // (0,1)
  closed,        // [0,1]
  left_closed,   // [0,1)
  right_closed,  // (0,1]
  point,
  finite_chain,  // k >= 2 points
};

inline constexpr BlockKind kAllBlockKinds[] = {
    BlockKind::open,  BlockKind::closed, BlockKind::left_closed,
    BlockKind::right_closed, BlockKind::point, BlockKind::finite_chain,
};

std::string_view to_string(BlockKind kind);
/// Throws ParseError on unknown names.
BlockKind block_kind_from_string(std::string_view name);

struct Block {
  BlockKind kind = BlockKind::closed;
  /// Only meaningful for finite_chain.
  int chain_length = 2;

  bool has_min() const;
  bool has_max() const;
  /// Intervals are infinite; point and finite_chain are not.
  bool is_interval() const;

  bool operator==(const Block&) const = default;
};

class BlockSpace {
 public:
  /// `reversed[i]` swaps block i's order (the complementary selection).
  /// An empty `reversed` means all standard.
  BlockSpace(std::vector<Block> blocks, Tournament gamma, std::vector<bool> reversed = {});

  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int i) const { return blocks_[i]; }
  const Tournament& gamma() const { return gamma_; }
  const std::vector<bool>& reversed() const { return reversed_; }

  /// Block i has a ≤σ-largest point.
  bool top_present(int i) const;
  /// Block i has a ≤σ-smallest point.
  bool bottom_present(int i) const;

  bool operator==(const BlockSpace&) const = default;

 private:
  std::vector<Block> blocks_;
  Tournament gamma_;
  std::vector<bool> reversed_;
};

enum class Qualifier {
  none,
  block_max,    // only the block's ≤σ-largest point
  every_point,
};

std::string_view to_string(Qualifier q);

struct SymbolicKingReport {
  std::vector<Qualifier> quasi_king;  // per block
  std::vector<Qualifier> king;        // per block
  /// Block whose ≤σ-largest point is the emperor.
  std::optional<int> emperor_block;
  /// Condensation of γ, earlier classes below later ones.
  std::vector<PointSet> block_condensation;
  /// witness_paths[g] is a shortest γ-path g, ..., d into the first
  /// quasi-king block d (empty when there is none).
  std::vector<std::vector<int>> witness_paths;

  bool has_quasi_king() const;
  bool has_king() const;
  PointSet quasi_king_blocks() const;
  PointSet king_blocks() const;
  /// Status of a point of `block` that is (or is not) the block's ≤σ-max.
  bool is_quasi_king(int block, bool is_block_max) const;
  bool is_king(int block, bool is_block_max) const;

  bool operator==(const SymbolicKingReport&) const = default;
};

SymbolicKingReport symbolic_king_report(const BlockSpace& bs);

struct SkeletonSample {
  int block = 0;
  /// 0 is the ≤σ-smallest sample of its block.
  int rank = 0;
  bool is_top = false;
  bool is_bottom = false;
  /// The sample really is the block's endpoint, not a generic stand-in.
  bool true_top = false;
  bool true_bottom = false;
};

struct Skeleton {
  Tournament t;
  /// Indexed by skeleton point.
  std::vector<SkeletonSample> samples;
};

/// Samples every interval block by `density` (>= 3) points, point blocks by
/// one and finite chains by all of their points, glued by γ.
Skeleton finite_skeleton(const BlockSpace& bs, int density = 3);

struct SkeletonAgreement {
  bool agrees = true;
  std::string mismatch;
};

/// Cross-checks symbolic_king_report against king_report on the skeleton,
/// where a generic sample takes the status of a generic interior sample.
SkeletonAgreement skeleton_agreement(const BlockSpace& bs, int density = 3);

enum class CutKind { jump, gap, mixed };
std::string_view to_string(CutKind c);

/// Block indices in glued (γ) order; throws NonLinearGamma unless γ is
/// transitive.
std::vector<int> glued_order(const BlockSpace& bs);
/// cuts[i] sits between glued positions i and i+1.
std::vector<CutKind> cut_kinds(const BlockSpace& bs);

/// The glued linear order is compact: global endpoints exist and no cut is a gap.
bool is_order_compact(const BlockSpace& bs);

/// Components as sets of block indices, in glued order. Adjacent blocks
/// merge exactly at mixed cuts.
std::vector<PointSet> block_components(const BlockSpace& bs);

/// Tournament on components (indexed as in block_components) with
/// C < D iff every point of C is below every point of D.
Tournament decomposition_tournament(const BlockSpace& bs);

struct ClopenWitness {
  PointSet component;
  /// Y = blocks strictly below the component ∪ the component.
  PointSet y_blocks;
  bool rest_below_component = false;
  bool clopen = false;
  /// Cut just above the component; nullopt when it is the top component.
  std::optional<CutKind> upper_cut;
};

/// For a component without a ≤σ-largest point, the clopen set Y ⊇ Z with
/// Y∖Z <σ Z. Throws ComponentHasMax otherwise.
ClopenWitness lower_clopen_witness(const BlockSpace& bs, int component);

/// Largest block count accepted by block_quasi_king_space.
inline constexpr int kMaxFamilyBlocks = 6;

/// Every selection in the block-respecting family (all γ', all orientation
/// flags) on these blocks has a quasi-king. Depends only on the block list.
bool block_quasi_king_space(const BlockSpace& bs, Exec exec = Exec::parallel);

}  // namespace wsel
