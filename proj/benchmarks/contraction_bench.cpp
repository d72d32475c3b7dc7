#include <benchmark/benchmark.h>

#include "navskel/contraction.hpp"
#include "navskel/generators.hpp"
#include "navskel/graph_io.hpp"

namespace {

using namespace navskel;

void BM_TreeContract(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto g = gen_tree_with_chords(n, 2 * n, 2);
  const auto order = order_links_random(g, 9);
  for (auto _ : state) benchmark::DoNotOptimize(tree_contract(g, order).supernodes.size());
  state.SetComplexityN(static_cast<std::int64_t>(g.link_count()));
}
BENCHMARK(BM_TreeContract)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_MinimizeKarate(benchmark::State& state) {
  const auto g = load_edge_list_file(NAVSKEL_DATA_DIR "/karate.edges");
  for (auto _ : state) benchmark::DoNotOptimize(minimize_h_simp(g, 500, 42, 1).best.info.h_simp);
}
BENCHMARK(BM_MinimizeKarate)->Unit(benchmark::kMillisecond);

void BM_Rewire(benchmark::State& state) {
  const auto g = gen_connected_random(500, 0.02, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rewire_degree_preserving(g, g.link_count(), 1).link_count());
}
BENCHMARK(BM_Rewire)->Unit(benchmark::kMillisecond);

}  // namespace
