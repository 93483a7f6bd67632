#include "wsel/lab/search.hpp"

#include <string>

#include "wsel/enumerate.hpp"
#include "wsel/error.hpp"

namespace wsel::lab {
namespace {

constexpr std::size_t kKinds = std::size(kAllBlockKinds);

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

template <class T, class Candidates, class Matches>
void sweep(SearchResult<T>& result, std::size_t count, SearchMode mode, Exec exec,
           Candidates&& at, Matches&& matches) {
  result.examined += count;
  if (mode == SearchMode::first) {
    if (auto idx = find_first(count, exec, [&](std::size_t i) { return matches(at(i)); })) {
      result.witnesses.push_back(at(*idx));
      result.matches = 1;
    }
    return;
  }
  if (mode == SearchMode::count) {
    result.matches += count_if(count, exec, [&](std::size_t i) { return matches(at(i)); });
    return;
  }
  std::vector<T> hits = collect<T>(count, exec, [&](std::size_t i) -> std::optional<T> {
    T candidate = at(i);
    if (matches(candidate)) return candidate;
    return std::nullopt;
  });
  result.matches += hits.size();
  for (auto& h : hits) result.witnesses.push_back(std::move(h));
}

}  // namespace

SearchResult<Tournament> search_tournaments(const SearchPredicate& pred, int min_n, int max_n,
                                            SearchMode mode, Exec exec) {
  if (pred.domain() != SearchDomain::tournaments) {
    throw Error(ErrorCode::unknown_predicate, "predicate is for block spaces");
  }
  SearchResult<Tournament> result;
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    const std::vector<Tournament> classes = iso_classes(n, exec);
    sweep(result, classes.size(), mode, exec, [&](std::size_t i) { return classes[i]; },
          [&](const Tournament& t) { return pred.holds(t, king_report(t)); });
    if (mode == SearchMode::first && !result.witnesses.empty()) break;
  }
  return result;
}

std::size_t blockspace_count(int k) {
  return ipow(kKinds, k) * (std::size_t{1} << (k * (k - 1) / 2)) * (std::size_t{1} << k);
}

BlockSpace blockspace_at(int k, std::size_t index, int chain_length) {
  const std::size_t orientations = std::size_t{1} << k;
  const std::size_t gammas = std::size_t{1} << (k * (k - 1) / 2);
  const std::size_t mask = index % orientations;
  const std::size_t code = (index / orientations) % gammas;
  std::size_t kinds = index / orientations / gammas;
  std::vector<Block> blocks(k);
  for (int b = k - 1; b >= 0; --b) {
    const BlockKind kind = kAllBlockKinds[kinds % kKinds];
    blocks[b] = {kind, kind == BlockKind::finite_chain ? chain_length : 2};
    kinds /= kKinds;
  }
  std::vector<bool> reversed(k);
  for (int b = 0; b < k; ++b) reversed[b] = (mask >> b) & 1U;
  return BlockSpace(std::move(blocks), Tournament::from_code(k, code), std::move(reversed));
}

SearchResult<BlockSpace> search_blockspaces(const SearchPredicate& pred, int min_blocks,
                                            int max_blocks, SearchMode mode, Exec exec,
                                            int chain_length) {
  if (pred.domain() != SearchDomain::blockspaces) {
    throw Error(ErrorCode::unknown_predicate, "predicate is for tournaments");
  }
  if (max_blocks > kMaxSearchBlocks) {
    throw Error(ErrorCode::size_limit,
                "block search needs <= " + std::to_string(kMaxSearchBlocks) + " blocks");
  }
  SearchResult<BlockSpace> result;
  for (int k = std::max(min_blocks, 1); k <= max_blocks; ++k) {
    sweep(result, blockspace_count(k), mode, exec,
          [&](std::size_t i) { return blockspace_at(k, i, chain_length); },
          [&](const BlockSpace& bs) { return pred.holds(bs, symbolic_king_report(bs)); });
    if (mode == SearchMode::first && !result.witnesses.empty()) break;
  }
  return result;
}

}  // namespace wsel::lab
