#include "wsel/lab/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "wsel/blockspace.hpp"
#include "wsel/enumerate.hpp"
#include "wsel/error.hpp"
#include "wsel/lab/json_io.hpp"
#include "wsel/lab/search.hpp"
#include "wsel/lexsum.hpp"
#include "wsel/seltopo.hpp"
#include "wsel/topology.hpp"

namespace wsel::lab {
namespace {

using Failures = std::vector<std::string>;

struct Outcome {
  std::size_t cases = 0;
  Failures failures;
};

/// Every labeled tournament with 1 <= n <= max_n, by n then code.
class LabeledRange {
 public:
  explicit LabeledRange(int max_n) {
    if (max_n > EnumerationLimits{}.max_labeled_n) {
      throw Error(ErrorCode::size_limit, "labeled sweep bound exceeded");
    }
    for (int n = 1; n <= max_n; ++n) {
      starts_.push_back(total_);
      total_ += std::size_t{1} << (n * (n - 1) / 2);
    }
  }
  std::size_t size() const { return total_; }
  Tournament at(std::size_t i) const {
    int n = static_cast<int>(starts_.size());
    while (starts_[n - 1] > i) --n;
    return Tournament::from_code(n, i - starts_[n - 1]);
  }

 private:
  std::vector<std::size_t> starts_;
  std::size_t total_ = 0;
};

std::vector<Tournament> iso_upto(int max_n, Exec exec) {
  std::vector<Tournament> all;
  for (int n = 1; n <= max_n; ++n) {
    for (Tournament& t : iso_classes(n, exec)) all.push_back(std::move(t));
  }
  return all;
}

std::optional<std::string> fail(const std::string& what, const json& witness) {
  return what + " " + witness.dump();
}

// Kings exist; quasi-kings contain them; an emperor is a king.
std::optional<std::string> check_king_basics(const Tournament& t) {
  const KingReport r = king_report(t);
  if (r.kings.empty()) return fail("no king", encode(t));
  if (!r.kings.subset_of(r.quasi_kings)) return fail("king not quasi-king", encode(t));
  if (r.emperor && !r.kings.contains(*r.emperor)) return fail("emperor not king", encode(t));
  return std::nullopt;
}

Outcome landau(const SuiteBounds& b, Exec exec) {
  const std::vector<Tournament> classes = iso_upto(*b.max_n, exec);
  Outcome out;
  out.failures = collect<std::string>(classes.size(), exec,
                                      [&](std::size_t i) { return check_king_basics(classes[i]); });
  const auto random = collect<std::string>(
      static_cast<std::size_t>(*b.random_cases), exec, [&](std::size_t i) {
        std::mt19937_64 rng(case_seed(b.seed, i));
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(*b.random_max_n));
        return check_king_basics(random_tournament(n, rng));
      });
  out.failures.insert(out.failures.end(), random.begin(), random.end());
  out.cases = classes.size() + static_cast<std::size_t>(*b.random_cases);
  return out;
}

Outcome transitivity(const SuiteBounds& b, Exec exec) {
  const LabeledRange range(*b.max_n);
  Outcome out{range.size(), {}};
  out.failures = collect<std::string>(range.size(), exec, [&](std::size_t i) {
    const Tournament t = range.at(i);
    const RelationTriple rel = relation_closures(t);
    const bool lll_eq = rel.lll == rel.leq;
    const bool ll_eq = rel.ll == rel.leq;
    const bool transitive = t.is_transitive();
    if (lll_eq == ll_eq && ll_eq == transitive) return std::optional<std::string>();
    return fail("transitivity equivalence broken", encode(t));
  });
  return out;
}

Outcome emperor(const SuiteBounds& b, Exec exec) {
  const std::vector<Tournament> classes = iso_upto(*b.max_n, exec);
  Outcome out{classes.size(), {}};
  out.failures = collect<std::string>(classes.size(), exec, [&](std::size_t i) {
    const Tournament& t = classes[i];
    const KingReport r = king_report(t);
    if ((r.kings.size() == 1) != r.emperor.has_value()) {
      return fail("single king iff emperor broken", encode(t));
    }
    if (r.emperor && !(r.kings & r.quasi_kings).contains(*r.emperor)) {
      return fail("emperor outside kings/quasi-kings", encode(t));
    }
    return std::optional<std::string>();
  });
  return out;
}

Outcome quasi_king_triangle(const SuiteBounds& b, Exec exec) {
  const LabeledRange range(*b.max_n);
  Outcome out{range.size(), {}};
  out.failures = collect<std::string>(range.size(), exec, [&](std::size_t i) {
    const Tournament t = range.at(i);
    const KingReport r = king_report(t);
    if (r.condensation.back() != r.quasi_kings) {
      return fail("final condensation class differs from quasi-kings", encode(t));
    }
    const int q = quasi_king_via_reach_sets(t);
    if (!r.quasi_kings.contains(q)) return fail("reach-set quasi-king not a quasi-king", encode(t));
    return std::optional<std::string>();
  });
  return out;
}

Outcome discreteness(const SuiteBounds& b, Exec exec) {
  const LabeledRange range(*b.max_n);
  Outcome out;
  out.failures = collect<std::string>(range.size(), exec, [&](std::size_t i) {
    const Tournament t = range.at(i);
    const FiniteTopology tau = selection_topology(t);
    if (!tau.is_discrete()) return fail("selection topology not discrete", encode(t));
    if (!separately_continuous(SelectionOnSpace(t, tau))) {
      return fail("not separately continuous w.r.t. own topology", encode(t));
    }
    if (quasi_components(tau) != components(tau)) {
      return fail("quasi-components differ from components", encode(t));
    }
    return std::optional<std::string>();
  });
  const auto random = collect<std::string>(
      static_cast<std::size_t>(*b.random_cases), exec, [&](std::size_t i) {
        std::mt19937_64 rng(case_seed(b.seed, i));
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(*b.random_max_n));
        const Tournament t = random_tournament(n, rng);
        if (selection_topology(t).is_discrete()) return std::optional<std::string>();
        return fail("selection topology not discrete", encode(t));
      });
  out.failures.insert(out.failures.end(), random.begin(), random.end());
  out.cases = range.size() + static_cast<std::size_t>(*b.random_cases);
  return out;
}

Outcome continuity_ladder(const SuiteBounds& b, Exec exec) {
  Outcome out;
  for (int n = 1; n <= *b.max_n; ++n) {
    const std::vector<FiniteTopology> tops = enumerate_topologies(n);
    const std::size_t tournaments = std::size_t{1} << (n * (n - 1) / 2);
    const std::size_t count = tournaments * tops.size();
    auto failures = collect<std::string>(count, exec, [&](std::size_t i) {
      const SelectionOnSpace s(Tournament::from_code(n, i / tops.size()), tops[i % tops.size()]);
      const bool separately = separately_continuous(s);
      const bool vietoris = vietoris_continuous(s);
      const bool properly = properly_continuous(s);
      if (vietoris && !separately) return fail("Vietoris but not separately continuous", encode(s));
      if (properly && !vietoris) return fail("properly but not Vietoris continuous", encode(s));
      return std::optional<std::string>();
    });
    out.cases += count;
    out.failures.insert(out.failures.end(), failures.begin(), failures.end());
  }
  return out;
}

Outcome lexsum_continuity(const SuiteBounds& b, Exec exec) {
  constexpr int kMaxPart = 3;
  std::map<int, std::vector<FiniteTopology>> tops;
  for (int m = 1; m <= kMaxPart; ++m) tops[m] = enumerate_topologies(m);
  auto etas = [](int m) { return std::size_t{1} << (m * (m - 1) / 2); };

  // Ordered two-part splits {A, B} with 0 ∈ A; both gamma orientations are
  // swept, so this covers every ordering.
  struct Split {
    PointSet a, b;
    std::size_t cases;
  };
  std::vector<Split> splits;
  for (int n = 2; n <= *b.max_n; ++n) {
    const PointSet all = PointSet::full(n);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); bits += 2) {
      const PointSet a = PointSet::from_bits(bits);
      const PointSet rest = all - a;
      if (rest.empty() || a.size() > kMaxPart || rest.size() > kMaxPart) continue;
      const std::size_t cases = 2 * etas(a.size()) * etas(rest.size()) * tops[a.size()].size() *
                                tops[rest.size()].size();
      splits.push_back({a, rest, cases});
    }
  }

  Outcome out;
  for (const Split& split : splits) {
    const int ma = split.a.size();
    const int mb = split.b.size();
    const auto& ta = tops[ma];
    const auto& tb = tops[mb];
    auto failures = collect<std::string>(split.cases, exec, [&](std::size_t i) {
      const std::size_t top_b = i % tb.size();
      i /= tb.size();
      const std::size_t top_a = i % ta.size();
      i /= ta.size();
      const std::size_t eta_b = i % etas(mb);
      i /= etas(mb);
      const std::size_t eta_a = i % etas(ma);
      i /= etas(ma);
      const PartitionedSelection p{{split.a, split.b},
                                   Tournament::from_code(2, i),
                                   {Tournament::from_code(ma, eta_a), Tournament::from_code(mb, eta_b)}};
      const std::vector<FiniteTopology> part_tops{ta[top_a], tb[top_b]};
      if (check_lexsum_continuity(p, part_tops).ok()) return std::optional<std::string>();
      return fail("lexsum continuity clause violated", encode(p));
    });
    out.cases += split.cases;
    out.failures.insert(out.failures.end(), failures.begin(), failures.end());
  }
  return out;
}

BlockSpace cyclic_open_triple() {
  const std::vector<std::pair<int, int>> cycle{{0, 1}, {1, 2}, {2, 0}};
  return BlockSpace(std::vector<Block>(3, Block{BlockKind::open, 2}), Tournament::from_pairs(3, cycle));
}

Outcome blockmodel_oracle(const SuiteBounds& b, Exec exec) {
  Outcome out;
  {
    const SymbolicKingReport r = symbolic_king_report(cyclic_open_triple());
    ++out.cases;
    for (Qualifier q : r.quasi_king) {
      if (q != Qualifier::every_point || r.has_king()) {
        out.failures.push_back(fail("three cyclic open blocks", encode(cyclic_open_triple())).value());
        break;
      }
    }
  }
  for (int k = 1; k <= *b.max_blocks; ++k) {
    const std::size_t count = blockspace_count(k);
    auto failures = collect<std::string>(count, exec, [&](std::size_t i) {
      const BlockSpace bs = blockspace_at(k, i);
      const SkeletonAgreement a = skeleton_agreement(bs, *b.density);
      if (a.agrees) return std::optional<std::string>();
      return fail(a.mismatch, encode(bs));
    });
    out.cases += count;
    out.failures.insert(out.failures.end(), failures.begin(), failures.end());
  }
  return out;
}

Outcome blockmodel_compactness(const SuiteBounds& b, Exec exec) {
  Outcome out;
  for (int k = 1; k <= *b.max_blocks; ++k) {
    std::vector<std::uint64_t> linear;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (k * (k - 1) / 2)); ++c) {
      if (Tournament::from_code(k, c).is_transitive()) linear.push_back(c);
    }
    const std::size_t orientations = std::size_t{1} << k;
    std::size_t kind_tuples = 1;
    for (int i = 0; i < k; ++i) kind_tuples *= std::size(kAllBlockKinds);
    const std::size_t per_tuple = linear.size() * orientations;

    // The family sweep ignores γ and orientation, so it runs once per tuple.
    const std::size_t per_kinds = blockspace_count(k) / kind_tuples;
    std::vector<char> family_ok(kind_tuples);
    const auto family = collect<char>(kind_tuples, exec, [&](std::size_t i) {
      return std::optional<char>(block_quasi_king_space(blockspace_at(k, i * per_kinds), Exec::serial));
    });
    std::copy(family.begin(), family.end(), family_ok.begin());

    auto failures = collect<std::string>(kind_tuples * per_tuple, exec, [&](std::size_t i) {
      const std::size_t tuple = i / per_tuple;
      const std::size_t rest = i % per_tuple;
      const std::size_t index =
          tuple * per_kinds + linear[rest / orientations] * orientations + rest % orientations;
      const BlockSpace bs = blockspace_at(k, index);
      const bool compact = is_order_compact(bs);
      const SymbolicKingReport r = symbolic_king_report(bs);
      if (family_ok[tuple] && !compact) return fail("quasi-king family but not compact", encode(bs));
      if (compact && !r.has_quasi_king()) return fail("compact but no quasi-king", encode(bs));
      if (!bs.top_present(glued_order(bs).back()) && r.has_quasi_king()) {
        return fail("top block without max but a quasi-king", encode(bs));
      }
      return std::optional<std::string>();
    });
    out.cases += kind_tuples * per_tuple;
    out.failures.insert(out.failures.end(), failures.begin(), failures.end());
  }
  return out;
}

struct SuiteSpec {
  const char* name;
  SuiteBounds defaults;
  std::function<Outcome(const SuiteBounds&, Exec)> run;
};

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> suites{
      {"landau", {.max_n = 6, .random_cases = 10000, .random_max_n = 64}, landau},
      {"transitivity", {.max_n = 5}, transitivity},
      {"emperor", {.max_n = 6}, emperor},
      {"quasi-king-triangle", {.max_n = 6}, quasi_king_triangle},
      {"discreteness", {.max_n = 6, .random_cases = 1000, .random_max_n = 40}, discreteness},
      {"continuity-ladder", {.max_n = 4}, continuity_ladder},
      {"lexsum-continuity", {.max_n = 5}, lexsum_continuity},
      {"blockmodel-oracle", {.max_blocks = 3, .density = 3}, blockmodel_oracle},
      {"blockmodel-compactness", {.max_blocks = 4}, blockmodel_compactness},
  };
  return suites;
}

const SuiteSpec& find_suite(std::string_view name) {
  for (const SuiteSpec& s : registry()) {
    if (s.name == name) return s;
  }
  throw Error(ErrorCode::unknown_suite, "'" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteSpec& s : registry()) names.emplace_back(s.name);
  return names;
}

SuiteBounds suite_defaults(std::string_view name) { return find_suite(name).defaults; }

SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds, Exec exec) {
  const SuiteSpec& spec = find_suite(name);
  SuiteBounds b = spec.defaults;
  b.seed = bounds.seed;
  if (bounds.max_n) b.max_n = bounds.max_n;
  if (bounds.random_cases) b.random_cases = bounds.random_cases;
  if (bounds.random_max_n) b.random_max_n = bounds.random_max_n;
  if (bounds.max_blocks) b.max_blocks = bounds.max_blocks;
  if (bounds.density) b.density = bounds.density;

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome = spec.run(b, exec);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  SuiteResult r;
  r.name = spec.name;
  r.cases = outcome.cases;
  r.failures = std::move(outcome.failures);
  r.wall_seconds = elapsed.count();
  r.seed = b.seed;
  r.bounds = b;
  return r;
}

nlohmann::json encode(const SuiteResult& r) {
  nlohmann::json bounds = nlohmann::json::object();
  if (r.bounds.max_n) bounds["max_n"] = *r.bounds.max_n;
  if (r.bounds.random_cases) bounds["random_cases"] = *r.bounds.random_cases;
  if (r.bounds.random_max_n) bounds["random_max_n"] = *r.bounds.random_max_n;
  if (r.bounds.max_blocks) bounds["max_blocks"] = *r.bounds.max_blocks;
  if (r.bounds.density) bounds["density"] = *r.bounds.density;
  return {{"suite", r.name},  {"cases", r.cases}, {"failures", r.failures},
          {"passed", r.passed()}, {"seed", r.seed},  {"bounds", bounds}};
}

}  // namespace wsel::lab
