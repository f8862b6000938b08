#include <benchmark/benchmark.h>

#include "dcol/constructions.hpp"
#include "dcol/greedy.hpp"
#include "dcol/io.hpp"
#include "dcol/oracle.hpp"
#include "dcol/planar.hpp"
#include "dcol/separator.hpp"
#include "dcol/structural.hpp"

using namespace dcol;

static void BM_Lovasz(benchmark::State& st) {
  Graph g = random_bounded_degree(static_cast<int>(st.range(0)), 12, 0.9, 1);
  for (auto _ : st) benchmark::DoNotOptimize(lovasz_defective(g, 2));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Lovasz)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_Outerplanar(benchmark::State& st) {
  Graph g = random_maximal_outerplanar(static_cast<int>(st.range(0)), 2).graph;
  for (auto _ : st) benchmark::DoNotOptimize(outerplanar_two_colour(g));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Outerplanar)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_Poh(benchmark::State& st) {
  auto t = random_plane_triangulation(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(poh_three_colour(t));
}
BENCHMARK(BM_Poh)->RangeMultiplier(2)->Range(64, 1024);

static void BM_SurfaceFour(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  Graph g = random_planar(n, 0.7, 4);
  auto lists = ListAssignment::uniform(n, 4);
  auto o = genus_oracle(0);
  for (auto _ : st) benchmark::DoNotOptimize(surface_four_colour(g, lists, 0, o));
}
BENCHMARK(BM_SurfaceFour)->RangeMultiplier(2)->Range(100, 800);

static void BM_Fragment(benchmark::State& st) {
  Graph g = random_plane_triangulation(static_cast<int>(st.range(0)), 5).graph;
  auto o = genus_oracle(0);
  for (auto _ : st) benchmark::DoNotOptimize(fragment(g, o, 32));
}
BENCHMARK(BM_Fragment)->RangeMultiplier(2)->Range(100, 800);

static void BM_GomoryHu(benchmark::State& st) {
  Graph g = random_plane_triangulation(static_cast<int>(st.range(0)), 6).graph;
  for (auto _ : st) benchmark::DoNotOptimize(gomory_hu(g));
}
BENCHMARK(BM_GomoryHu)->RangeMultiplier(2)->Range(32, 512);

static void BM_Vdhw(benchmark::State& st) {
  Graph g = random_planar(static_cast<int>(st.range(0)), 0.7, 7);
  for (auto _ : st) benchmark::DoNotOptimize(vdhw_colour(g, 5));
}
BENCHMARK(BM_Vdhw)->RangeMultiplier(2)->Range(100, 800);

static void BM_Defect2(benchmark::State& st) {
  Graph g = random_bounded_degree(static_cast<int>(st.range(0)), 10, 0.9, 8);
  auto base = lovasz_defective(g, 2).colouring;
  for (auto _ : st) benchmark::DoNotOptimize(defect2_to_cluster(g, base, g.max_degree()));
}
BENCHMARK(BM_Defect2)->RangeMultiplier(4)->Range(256, 4096);

static void BM_ExactStandardExample(benchmark::State& st) {
  Graph g = standard_defect(3, 2);
  OracleLimits lim;
  lim.colour_cap = 64;
  for (auto _ : st) benchmark::DoNotOptimize(min_colours_defect(g, 2, lim));
}
BENCHMARK(BM_ExactStandardExample);

static void BM_Graph6RoundTrip(benchmark::State& st) {
  Graph g = random_planar(static_cast<int>(st.range(0)), 0.7, 9);
  for (auto _ : st) benchmark::DoNotOptimize(decode_graph6(encode_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
