// Serial reference vs OpenMP for the heavy sweeps. Arg 0 = serial,
// arg 1 = parallel.

#include <benchmark/benchmark.h>

#include "wsel/blockspace.hpp"
#include "wsel/enumerate.hpp"
#include "wsel/lab/search.hpp"
#include "wsel/lab/suites.hpp"

using namespace wsel;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_ExtendIsoClasses(benchmark::State& state) {
  const std::vector<Tournament> six = iso_classes(6, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(extend_iso_classes(six, exec_of(state)));
  state.SetLabel("6 -> 7 points");
}
BENCHMARK(BM_ExtendIsoClasses)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(lab::run_suite(name, {}, exec_of(state)));
}
BENCHMARK_CAPTURE(BM_Suite, landau, "landau")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, discreteness, "discreteness")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, blockmodel_oracle, "blockmodel-oracle")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, blockmodel_compactness, "blockmodel-compactness")
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);

void BM_FamilySweep(benchmark::State& state) {
  const BlockSpace bs(std::vector<Block>(5, Block{BlockKind::closed}), Tournament::chain(5));
  for (auto _ : state) benchmark::DoNotOptimize(block_quasi_king_space(bs, exec_of(state)));
  state.SetLabel("5 closed blocks");
}
BENCHMARK(BM_FamilySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BlockSearch(benchmark::State& state) {
  const auto pred = lab::SearchPredicate::parse("has_quasi_king && !has_king", lab::SearchDomain::blockspaces);
  for (auto _ : state)
    benchmark::DoNotOptimize(lab::search_blockspaces(pred, 1, 4, lab::SearchMode::count, exec_of(state)));
}
BENCHMARK(BM_BlockSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
