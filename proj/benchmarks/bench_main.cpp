#include <benchmark/benchmark.h>

#include "egstab/algorithms.hpp"
#include "egstab/canonical.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/families.hpp"
#include "egstab/graph6.hpp"

using namespace egstab;

namespace {

Graph petersen() {
  return from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

Graph random_graph(int n, std::uint64_t seed) {
  Graph g(n);
  std::uint64_t s = seed;
  auto rnd = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rnd() & 1) g.add_edge(i, j);
  return g;
}

void bm_circumference_petersen(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(circumference(g));
}
BENCHMARK(bm_circumference_petersen);

void bm_circumference_h(benchmark::State& state) {
  Graph g = build_h({13, 10, 3});
  for (auto _ : state) benchmark::DoNotOptimize(circumference(g));
}
BENCHMARK(bm_circumference_h);

void bm_clique_profile(benchmark::State& state) {
  Graph g = build_h({20, 12, 4});
  for (auto _ : state) benchmark::DoNotOptimize(clique_profile(g));
}
BENCHMARK(bm_clique_profile);

void bm_canonical_random10(benchmark::State& state) {
  std::vector<Graph> graphs;
  for (int t = 0; t < 64; ++t) graphs.push_back(random_graph(10, 0x9e3779b9 + t));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_labeling(graphs[i++ & 63]));
  }
}
BENCHMARK(bm_canonical_random10);

void bm_canonical_k10(benchmark::State& state) {
  Graph g = random_graph(10, 1);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) g.add_edge(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(bm_canonical_k10);

void bm_enumerate_two_connected_7(benchmark::State& state) {
  for (auto _ : state) {
    // measures the filter + decode path; level construction is memoized
    benchmark::DoNotOptimize(enumerate_two_connected(7));
  }
}
BENCHMARK(bm_enumerate_two_connected_7);

void bm_embed_family_member(benchmark::State& state) {
  Graph host = build_gnk3(14, 10);
  Graph pat = build_special(SpecialTag::F4, 11, 10, 2).graph;
  for (auto _ : state) benchmark::DoNotOptimize(contains_subgraph(host, pat));
}
BENCHMARK(bm_embed_family_member);

void bm_posa_cycle(benchmark::State& state) {
  Graph g = petersen();
  Path p = greedy_maximal_path(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(posa_cycle(g, p));
}
BENCHMARK(bm_posa_cycle);

}  // namespace

BENCHMARK_MAIN();
