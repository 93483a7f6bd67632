#pragma once

// Exhaustive witness search over tournaments (one canonical representative
// per isomorphism class) and over block spaces.

#include <cstddef>
#include <vector>

#include "wsel/blockspace.hpp"
#include "wsel/lab/predicate.hpp"
#include "wsel/parallel.hpp"
#include "wsel/tournament.hpp"

namespace wsel::lab {

enum class SearchMode {
  first,  // stop at the first witness in enumeration order
  count,  // count matches, keep no witnesses
  all,
};

template <class T>
struct SearchResult {
  std::vector<T> witnesses;
  std::size_t matches = 0;
  std::size_t examined = 0;
};

/// Classes are visited by n, then by canonical code.
SearchResult<Tournament> search_tournaments(const SearchPredicate& pred, int min_n, int max_n,
                                            SearchMode mode, Exec exec = Exec::parallel);

/// Largest block count accepted by search_blockspaces.
inline constexpr int kMaxSearchBlocks = 4;

/// Block spaces are visited by block count, then block kinds (catalog order,
/// first block most significant), then γ code, then orientation mask.
/// finite_chain blocks use `chain_length` points.
SearchResult<BlockSpace> search_blockspaces(const SearchPredicate& pred, int min_blocks,
                                            int max_blocks, SearchMode mode,
                                            Exec exec = Exec::parallel, int chain_length = 2);

/// The i-th block space with k blocks in the search order above.
BlockSpace blockspace_at(int k, std::size_t index, int chain_length = 2);
/// Number of block spaces with k blocks in the search order.
std::size_t blockspace_count(int k);

}  // namespace wsel::lab
