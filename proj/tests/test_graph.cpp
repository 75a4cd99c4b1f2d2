#include <doctest.h>

#include "egstab/graph.hpp"
#include "oracles.hpp"

using namespace egstab;

TEST_CASE("from_edges builds the stated graphs") {
  Graph k3 = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(0, 2));

  Graph empty4 = from_edges(4, {});
  CHECK(empty4.n == 4);
  CHECK(empty4.edge_count() == 0);

  Graph c5 = oracles::cycle_graph(5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  // duplicates collapse
  CHECK(from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(from_edges(3, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(from_edges(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(from_edges(65, {}), CapacityExceeded);
}

TEST_CASE("connectivity predicates") {
  CHECK(is_two_connected(oracles::complete_graph(4)));
  // two triangles sharing one vertex: 0 is a cut vertex
  Graph bowtie = from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  CHECK(is_connected(bowtie));
  CHECK_FALSE(is_two_connected(bowtie));

  Graph p4 = oracles::path_graph(4);
  CHECK(is_connected(p4));
  CHECK_FALSE(is_two_connected(p4));

  CHECK_FALSE(is_two_connected(from_edges(2, {{0, 1}})));  // n < 3
  CHECK_FALSE(is_connected(from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("induced subgraph relabels and maps") {
  auto [k3, map3] = induced_subgraph(oracles::complete_graph(4), VertexSet(0b0111));
  CHECK(k3.n == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(map3 == std::vector<int>{0, 1, 2});

  auto [p3, mp] = induced_subgraph(oracles::cycle_graph(5), VertexSet(0b00111));
  CHECK(p3.n == 3);
  CHECK(p3.edge_count() == 2);

  CHECK_THROWS_AS(induced_subgraph(oracles::cycle_graph(5), VertexSet(0)), InvalidInput);
}

TEST_CASE("induced subgraph preserves adjacency through the map") {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto rnd = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rnd() % 8);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rnd() & 1) g.add_edge(i, j);
    std::uint64_t bits = rnd() & ((std::uint64_t(1) << n) - 1);
    if (!bits) bits = 1;
    auto [sub, map] = induced_subgraph(g, VertexSet(bits));
    for (int i = 0; i < sub.n; ++i)
      for (int j = i + 1; j < sub.n; ++j)
        CHECK(sub.has_edge(i, j) == g.has_edge(map[i], map[j]));
  }
}

TEST_CASE("path and cycle validation") {
  Graph c5 = oracles::cycle_graph(5);
  CHECK(is_path(c5, Path{{0, 1, 2, 3, 4}}));
  CHECK_FALSE(is_path(c5, Path{{0, 2}}));
  CHECK_FALSE(is_path(c5, Path{{0, 1, 0}}));
  CHECK(is_cycle(c5, CycleWitness{{0, 1, 2, 3, 4}}));
  CHECK_FALSE(is_cycle(c5, CycleWitness{{0, 1, 2}}));
}
