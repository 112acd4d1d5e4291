#include <benchmark/benchmark.h>

#include "pexc/catalog.hpp"
#include "pexc/constructions.hpp"
#include "pexc/io.hpp"
#include "pexc/perm_group.hpp"

using namespace pexc;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::load(PEXC_BENCH_DATA_DIR);
  return c;
}

// Fresh group each iteration so cached orbits are not reused.
void BM_DeletedModuleOrbits(benchmark::State& st) {
  const auto c = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    const MatGroup g = deleted_permutation_module(symmetric_group(c), Field::make(2));
    benchmark::DoNotOptimize(orbit_partition(g).num_orbits());
  }
  st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << (c % 2 ? c - 1 : c - 2)));
}
BENCHMARK(BM_DeletedModuleOrbits)->Arg(7)->Arg(11)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_GroupOrder(benchmark::State& st) {
  const MatGroup g = catalog().build("M23_GL11_2");
  for (auto _ : st) benchmark::DoNotOptimize(group_order(g));
}
BENCHMARK(BM_GroupOrder)->Unit(benchmark::kMillisecond);

void BM_VerifyEntry(benchmark::State& st, const char* name) {
  for (auto _ : st) benchmark::DoNotOptimize(catalog().verify(name).pass());
}
BENCHMARK_CAPTURE(BM_VerifyEntry, M23, "M23_GL11_2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyEntry, X216plus_L32, "X216plus_L32_GL8_3")->Unit(benchmark::kMillisecond);

void BM_SubsetOrbits(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const PermGroup h = alternating_group(n);
  for (auto _ : st) benchmark::DoNotOptimize(subset_orbits(h, 2).concealed);
}
BENCHMARK(BM_SubsetOrbits)->Arg(10)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PermOrder(benchmark::State& st) {
  const PermGroup m23 = load_perm_file(std::string(PEXC_BENCH_DATA_DIR) + "/perm/M23.json").group;
  for (auto _ : st) benchmark::DoNotOptimize(perm_order(m23));
}
BENCHMARK(BM_PermOrder)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
