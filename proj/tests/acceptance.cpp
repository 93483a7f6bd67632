// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Time limits are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wsel/blockspace.hpp"
#include "wsel/enumerate.hpp"
#include "wsel/lab/json_io.hpp"
#include "wsel/lab/search.hpp"
#include "wsel/lab/suites.hpp"

using namespace wsel;
using namespace wsel::lab;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kGoldenLimitMs = 1.0;
constexpr double kLandauLimitS = 10.0;
constexpr double kBlockModelLimitS = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_suite(Outcome& o, const SuiteResult& r) {
  o.require(r.passed(), r.name + " had " + std::to_string(r.failures.size()) + " failures" +
                            (r.failures.empty() ? "" : ", first " + r.failures.front()));
}

std::string suite_note(const SuiteResult& r) {
  return r.name + " " + std::to_string(r.cases) + " cases";
}

Outcome golden_tournament() {
  Outcome o;
  const auto start = Clock::now();
  const Tournament t = Tournament::from_pairs(
      4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}, {3, 1}});
  const KingReport r = king_report(t);
  const double ms = seconds_since(start) * 1e3;
  o.require(r.kings == (PointSet{0, 1, 2}), "kings");
  o.require(r.quasi_kings == (PointSet{0, 1, 2, 3}), "quasi-kings");
  o.require(!r.emperor, "emperor");
  o.require(ms < kGoldenLimitMs, "took " + std::to_string(ms) + " ms");
  o.detail = "kings {a,b,c}, quasi-kings {a,b,c,p}, no emperor, " + std::to_string(ms) + " ms < 1 ms" +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome landau() {
  Outcome o;
  const auto start = Clock::now();
  const std::size_t expected[] = {1, 1, 2, 4, 12, 56};
  std::size_t classes = 0;
  for (int n = 1; n <= 6; ++n) {
    const std::size_t got = iso_classes(n).size();
    o.require(got == expected[n - 1], "n=" + std::to_string(n) + " has " + std::to_string(got) + " classes");
    classes += got;
  }
  const SuiteResult r = run_suite("landau", {.max_n = 6, .random_cases = 10000, .random_max_n = 64});
  const double s = seconds_since(start);
  require_suite(o, r);
  o.require(r.cases == classes + 10000, "case count " + std::to_string(r.cases));
  o.require(s < kLandauLimitS, "took " + std::to_string(s) + " s");
  o.detail = suite_note(r) + ", " + std::to_string(s) + " s < 10 s" + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome simple_suite(const std::string& name, SuiteBounds bounds, std::size_t expected_cases) {
  Outcome o;
  const SuiteResult r = run_suite(name, bounds);
  require_suite(o, r);
  o.require(r.cases == expected_cases, "expected " + std::to_string(expected_cases) + " cases");
  o.detail = suite_note(r) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// The single-king / emperor equivalence over every labelled tournament, on
// top of the class-level suite.
Outcome emperor() {
  Outcome o = simple_suite("emperor", {.max_n = 6}, 76);
  std::size_t labeled = 0;
  for (int n = 1; n <= 6; ++n) {
    enumerate_tournaments(n, false, [&](const Tournament& t) {
      const KingReport r = king_report(t);
      if ((r.kings.size() == 1) != r.emperor.has_value()) o.require(false, encode(t).dump());
      ++labeled;
    });
  }
  o.detail += ", " + std::to_string(labeled) + " labelled tournaments";
  return o;
}

Outcome continuity() {
  Outcome o;
  const SuiteResult ladder = run_suite("continuity-ladder", {.max_n = 4});
  const SuiteResult sums = run_suite("lexsum-continuity", {.max_n = 5});
  require_suite(o, ladder);
  require_suite(o, sums);
  o.require(ladder.cases == 1 + 2 * 4 + 8 * 29 + 64 * 355, "ladder case count");
  o.detail = suite_note(ladder) + ", " + suite_note(sums) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome block_model() {
  Outcome o;
  const auto start = Clock::now();
  const Tournament cycle = Tournament::from_pairs(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
  const BlockSpace three_open(std::vector<Block>(3, Block{BlockKind::open}), cycle);
  const SymbolicKingReport r = symbolic_king_report(three_open);
  o.require(r.quasi_king == std::vector<Qualifier>(3, Qualifier::every_point), "three open blocks: quasi-kings");
  o.require(!r.has_king(), "three open blocks: kings");
  const BlockSpace open_top({Block{BlockKind::closed}, Block{BlockKind::open}}, Tournament::chain(2));
  o.require(!symbolic_king_report(open_top).has_quasi_king(), "open top block: quasi-king found");
  const SuiteResult sweep = run_suite("blockmodel-oracle", {.max_blocks = 3, .density = 3});
  const double s = seconds_since(start);
  require_suite(o, sweep);
  o.require(sweep.cases == 1 + 6 * 2 + 36 * 2 * 4 + 216 * 8 * 8, "sweep case count");
  o.require(s < kBlockModelLimitS, "took " + std::to_string(s) + " s");
  o.detail = "golden spaces ok, " + suite_note(sweep) + ", " + std::to_string(s) + " s < 60 s" +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome model_implications() {
  Outcome o;
  const SuiteResult r = run_suite("blockmodel-compactness", {.max_blocks = 4});
  require_suite(o, r);
  o.require(r.cases > 0, "no cases");
  o.detail = suite_note(r) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome minimality() {
  Outcome o;
  const auto pred = SearchPredicate::parse("quasi_king_count > king_count", SearchDomain::tournaments);
  const auto below = search_tournaments(pred, 1, 3, SearchMode::count);
  o.require(below.matches == 0, "witness with n <= 3");
  o.require(below.examined == 4, "n <= 3 classes examined: " + std::to_string(below.examined));
  const auto a = search_tournaments(pred, 1, 4, SearchMode::first, Exec::parallel);
  const auto b = search_tournaments(pred, 1, 4, SearchMode::first, Exec::serial);
  o.require(a.witnesses.size() == 1 && a.witnesses.front().size() == 4, "first witness not at n = 4");
  std::string witness;
  if (!a.witnesses.empty()) {
    witness = encode(a.witnesses.front()).dump();
    const KingReport r = king_report(a.witnesses.front());
    o.require(r.kings.subset_of(r.quasi_kings) && r.kings != r.quasi_kings, "witness check");
  }
  o.require(!b.witnesses.empty() && encode(b.witnesses.front()).dump() == witness, "witness differs across runs");
  o.detail = "n <= 3 empty, first witness " + witness + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cycle with dominated point: golden king report", golden_tournament},
      {"every tournament has a king", landau},
      {"quasi-king oracle triangle", [] { return simple_suite("quasi-king-triangle", {.max_n = 6}, 33867); }},
      {"transitivity iff the relations collapse", [] { return simple_suite("transitivity", {.max_n = 5}, 1099); }},
      {"one king iff emperor", emperor},
      {"finite selection topologies are discrete",
       [] { return simple_suite("discreteness", {.max_n = 6, .random_cases = 1000, .random_max_n = 40}, 34867); }},
      {"continuity ladder and lexicographic sums", continuity},
      {"block model golden spaces and skeleton agreement", block_model},
      {"block model: family => compact => quasi-king", model_implications},
      {"smallest quasi-king that is not a king", minimality},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
