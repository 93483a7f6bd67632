#include "wsel/tournament.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "wsel/error.hpp"

namespace wsel {
namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxPoints) {
    throw Error(ErrorCode::size_limit,
                "tournament size " + std::to_string(n) + " outside [1, 64]");
  }
}

std::string pair_str(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

Tournament::Tournament() : Tournament(std::vector<PointSet>(1)) {}

Tournament::Tournament(std::vector<PointSet> above)
    : above_(std::move(above)), below_(above_.size()) {
  for (int x = 0; x < size(); ++x) {
    for (int y : above_[x]) below_[y].insert(x);
  }
}

Tournament Tournament::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  check_size(n);
  std::vector<PointSet> above(n);
  std::vector<PointSet> seen(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n) {
      throw Error(ErrorCode::out_of_range_point, "pair " + pair_str(x, y));
    }
    if (x == y) throw Error(ErrorCode::self_pair, "pair " + pair_str(x, y));
    if (seen[x].contains(y)) throw Error(ErrorCode::duplicate_pair, "pair " + pair_str(x, y));
    seen[x].insert(y);
    seen[y].insert(x);
    above[x].insert(y);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!seen[i].contains(j)) throw Error(ErrorCode::missing_pair, "pair " + pair_str(i, j));
    }
  }
  return Tournament(std::move(above));
}

Tournament Tournament::from_above_sets(std::vector<PointSet> above) {
  const int n = static_cast<int>(above.size());
  check_size(n);
  const PointSet all = PointSet::full(n);
  for (int x = 0; x < n; ++x) {
    if (!above[x].subset_of(all)) {
      throw Error(ErrorCode::out_of_range_point, "row " + std::to_string(x));
    }
    if (above[x].contains(x)) throw Error(ErrorCode::self_pair, "pair " + pair_str(x, x));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const bool xy = above[x].contains(y);
      const bool yx = above[y].contains(x);
      if (xy && yx) throw Error(ErrorCode::duplicate_pair, "pair " + pair_str(x, y));
      if (!xy && !yx) throw Error(ErrorCode::missing_pair, "pair " + pair_str(x, y));
    }
  }
  return Tournament(std::move(above));
}

Tournament Tournament::chain(int n) {
  check_size(n);
  std::vector<PointSet> above(n);
  for (int x = 0; x < n; ++x) above[x] = PointSet::full(n) - PointSet::full(x + 1);
  return Tournament(std::move(above));
}

Tournament Tournament::from_code(int n, std::uint64_t code) {
  check_size(n);
  if (n > kMaxCodedPoints) throw Error(ErrorCode::size_limit, "code needs n <= 11");
  const int bits = n * (n - 1) / 2;
  std::vector<PointSet> above(n);
  int pos = bits - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, --pos) {
      if ((code >> pos) & 1U) {
        above[i].insert(j);
      } else {
        above[j].insert(i);
      }
    }
  }
  return Tournament(std::move(above));
}

std::uint64_t Tournament::code() const {
  if (size() > kMaxCodedPoints) throw Error(ErrorCode::size_limit, "code needs n <= 11");
  std::uint64_t c = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) c = (c << 1) | (less(i, j) ? 1U : 0U);
  }
  return c;
}

Tournament Tournament::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != size()) {
    throw Error(ErrorCode::size_mismatch, "permutation length");
  }
  std::vector<int> inverse(size(), -1);
  for (int i = 0; i < size(); ++i) {
    if (perm[i] < 0 || perm[i] >= size() || inverse[perm[i]] != -1) {
      throw Error(ErrorCode::out_of_range_point, "not a permutation");
    }
    inverse[perm[i]] = i;
  }
  std::vector<PointSet> above(size());
  for (int i = 0; i < size(); ++i) {
    for (int old_y : above_[perm[i]]) above[i].insert(inverse[old_y]);
  }
  return Tournament(std::move(above));
}

Tournament Tournament::induced(PointSet subset) const {
  if (subset.empty()) throw Error(ErrorCode::empty_subset, "induced sub-tournament");
  if (!subset.subset_of(ground())) throw Error(ErrorCode::out_of_range_point, "subset");
  const std::vector<int> labels = subset.to_vector();
  const int m = static_cast<int>(labels.size());
  std::vector<PointSet> above(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (less(labels[i], labels[j])) above[i].insert(j);
    }
  }
  return Tournament(std::move(above));
}

Tournament Tournament::reversed() const { return Tournament(below_); }

bool Tournament::is_transitive() const {
  for (int x = 0; x < size(); ++x) {
    for (int y : above_[x]) {
      if (!above_[y].subset_of(above_[x])) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> Tournament::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size()) * (size() - 1) / 2);
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      out.push_back(less(i, j) ? std::pair{i, j} : std::pair{j, i});
    }
  }
  return out;
}

PointSet Relation::column(int y) const {
  PointSet col;
  for (int x = 0; x < size(); ++x) {
    if (rows_[x].contains(y)) col.insert(x);
  }
  return col;
}

bool Relation::subset_of(const Relation& other) const {
  if (size() != other.size()) return false;
  for (int x = 0; x < size(); ++x) {
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  for (int x = 0; x < size(); ++x) {
    for (int y : rows_[x]) {
      if (!rows_[y].subset_of(rows_[x])) return false;
    }
  }
  return true;
}

Relation transitive_closure(const Relation& r) {
  std::vector<PointSet> rows(r.size());
  for (int x = 0; x < r.size(); ++x) rows[x] = r.row(x) | PointSet::single(x);
  for (int k = 0; k < r.size(); ++k) {
    for (int i = 0; i < r.size(); ++i) {
      if (rows[i].contains(k)) rows[i] |= rows[k];
    }
  }
  return Relation(std::move(rows));
}

RelationTriple relation_closures(const Tournament& t) {
  const int n = t.size();
  std::vector<PointSet> leq(n);
  for (int x = 0; x < n; ++x) leq[x] = t.above(x) | PointSet::single(x);

  std::vector<PointSet> ll(n);
  for (int x = 0; x < n; ++x) {
    for (int z : leq[x]) ll[x] |= leq[z];
  }
  Relation leq_rel(std::move(leq));
  Relation lll = transitive_closure(leq_rel);
  return {std::move(leq_rel), Relation(std::move(ll)), std::move(lll)};
}

std::vector<PointSet> condensation(const Tournament& t) {
  const int n = t.size();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> stack;
  PointSet on_stack;
  std::vector<PointSet> sccs;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (int w : t.above(v)) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.contains(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      PointSet scc;
      int w = -1;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        scc.insert(w);
      } while (w != v);
      sccs.push_back(scc);
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  // Tarjan emits sink components first.
  std::reverse(sccs.begin(), sccs.end());
  return sccs;
}

std::optional<std::vector<int>> witness_chain(const Tournament& t, int x, int q) {
  const int n = t.size();
  std::vector<int> parent(n, -1);
  std::vector<int> frontier{x};
  PointSet visited = PointSet::single(x);
  while (!frontier.empty() && !visited.contains(q)) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int w : t.above(v) - visited) {
        visited.insert(w);
        parent[w] = v;
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  if (!visited.contains(q)) return std::nullopt;
  std::vector<int> chain{q};
  for (int v = q; v != x; v = parent[v]) chain.push_back(parent[v]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

KingReport king_report(const Tournament& t, Witnesses witnesses) {
  const RelationTriple rel = relation_closures(t);
  KingReport report;
  report.kings = t.ground();
  report.quasi_kings = t.ground();
  for (int x = 0; x < t.size(); ++x) {
    report.kings &= rel.ll.row(x);
    report.quasi_kings &= rel.lll.row(x);
  }
  for (int q = 0; q < t.size(); ++q) {
    if ((t.below(q) | PointSet::single(q)) == t.ground()) report.emperor = q;
  }
  report.condensation = condensation(t);
  if (witnesses == Witnesses::all) {
    for (int q : report.quasi_kings) {
      for (int x = 0; x < t.size(); ++x) {
        if (auto c = witness_chain(t, x, q)) report.witness_chains.emplace(std::pair{x, q}, *c);
      }
    }
  }
  return report;
}

}  // namespace wsel
