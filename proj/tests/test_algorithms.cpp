#include <doctest.h>

#include <algorithm>

#include "egstab/algorithms.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/families.hpp"
#include "oracles.hpp"

using namespace egstab;

TEST_CASE("circumference on fixtures") {
  auto c5 = circumference(oracles::cycle_graph(5));
  REQUIRE(c5);
  CHECK(c5->first == 5);
  CHECK(is_cycle(oracles::cycle_graph(5), c5->second));

  auto pet = circumference(oracles::petersen());
  REQUIRE(pet);
  CHECK(pet->first == 9);
  CHECK(pet->first == oracles::naive_circumference(oracles::petersen()));
  CHECK(is_cycle(oracles::petersen(), pet->second));

  auto h = circumference(build_h({12, 9, 3}));
  REQUIRE(h);
  CHECK(h->first == 8);

  CHECK_FALSE(circumference(oracles::path_graph(6)));
  CHECK_FALSE(circumference(Graph(4)));
}

TEST_CASE("circumference matches naive enumeration exhaustively at n <= 5") {
  for (int n = 3; n <= 5; ++n)
    for (const Graph& g : oracles::all_labeled_graphs(n)) {
      auto c = circumference(g);
      CHECK((c ? c->first : 0) == oracles::naive_circumference(g));
      if (c) CHECK(is_cycle(g, c->second));
    }
}

TEST_CASE("circumference matches naive enumeration on all 6- and sampled 7-classes") {
  for (const Graph& g : enumerate_two_connected(6)) {
    auto c = circumference(g);
    REQUIRE(c);
    CHECK(c->first == oracles::naive_circumference(g));
  }
  auto level7 = enumerate_two_connected(7);
  for (std::size_t i = 0; i < level7.size(); i += 7) {  // deterministic sample
    auto c = circumference(level7[i]);
    REQUIRE(c);
    CHECK(c->first == oracles::naive_circumference(level7[i]));
  }
}

TEST_CASE("clique counts match brute force on 500 sampled enumerated graphs") {
  auto level = enumerate_two_connected(7);
  auto level8 = enumerate_two_connected(8);
  long long checked = 0;
  for (std::size_t i = 0; i < level.size() && checked < 250; i += 2, ++checked)
    for (int s = 2; s <= 5; ++s)
      CHECK(count_cliques(level[i], s) == oracles::brute_clique_count(level[i], s));
  for (std::size_t i = 0; i < level8.size() && checked < 500; i += 26, ++checked)
    for (int s = 2; s <= 5; ++s)
      CHECK(count_cliques(level8[i], s) == oracles::brute_clique_count(level8[i], s));
  CHECK(checked == 500);
}

TEST_CASE("longest cycle through an edge") {
  Graph k4 = oracles::complete_graph(4);
  for (auto [a, b] : k4.edges()) CHECK(longest_cycle_through_edge(k4, a, b) == 4);

  // two triangles sharing the edge {0,1}
  Graph book = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  CHECK(longest_cycle_through_edge(book, 0, 1) == 3);
  CHECK(longest_cycle_through_edge(book, 0, 2) == 4);

  CHECK(cycle_lengths_through_edge(k4, 0, 1) == (1ull << 3 | 1ull << 4));
  CHECK_THROWS_AS(longest_cycle_through_edge(book, 2, 3), InvalidInput);

  // bridge edge lies on no cycle
  Graph two_tri = from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  CHECK_FALSE(longest_cycle_through_edge(two_tri, 2, 3));

  auto wit = longest_cycle_through_edge_witness(book, 0, 2);
  REQUIRE(wit);
  CHECK(wit->length() == 4);
  CHECK(is_cycle(book, *wit));
}

TEST_CASE("longest S-path") {
  Graph c5 = oracles::cycle_graph(5);
  auto whole = longest_s_path(c5, VertexSet::full(5));
  REQUIRE(whole);
  CHECK(whole->first == 5);
  CHECK(is_path(c5, whole->second));

  auto single = longest_s_path(oracles::complete_graph(4), VertexSet::single(2));
  REQUIRE(single);
  CHECK(single->first == 1);  // both endpoints must lie in S

  // H(9,9,3): the three independent B vertices attach only to the three A
  // vertices, so at most two of them fit inside one path; ends in A∪C reach
  // 8 vertices, ends in B reach all 9.
  Graph h993 = build_h({9, 9, 3});
  VertexSet ac, ab;
  for (int v : {0, 1, 2, 6, 7, 8}) ac.add(v);  // A then C in construction order
  for (int v : {0, 1, 2, 3, 4, 5}) ab.add(v);
  auto sp = longest_s_path(h993, ac);
  REQUIRE(sp);
  CHECK(sp->first == 8);
  CHECK(is_path(h993, sp->second));
  auto sp2 = longest_s_path(h993, ab);
  REQUIRE(sp2);
  CHECK(sp2->first == 9);
}

TEST_CASE("longest path between endpoints") {
  CHECK(longest_path_between(oracles::path_graph(4), 0, 3) == 4);
  CHECK(longest_path_between(oracles::path_graph(4), 1, 1) == 1);
  CHECK_FALSE(longest_path_between(from_edges(4, {{0, 1}, {2, 3}}), 0, 3));
  CHECK(hamilton_path_between_sets(oracles::cycle_graph(5), VertexSet::single(0),
                                   VertexSet::single(4)));
  CHECK_FALSE(hamilton_path_between_sets(from_edges(3, {{0, 1}, {1, 2}}), VertexSet::single(1),
                                         VertexSet::single(2)));
}

TEST_CASE("clique counting") {
  Graph k4 = oracles::complete_graph(4);
  CHECK(count_cliques(k4, 3) == 4);
  CHECK(clique_number(k4) == 4);

  Graph h = build_h({12, 9, 3});
  CHECK(count_cliques(h, 3) == 38);
  CHECK(count_cliques(h, 3) == oracles::brute_clique_count(h, 3));
  CHECK(clique_number(h) == 6);

  std::uint64_t state = 0x12345678;
  auto rnd = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rnd() % 5);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rnd() & 1) g.add_edge(i, j);
    CHECK(count_cliques(g, 2) == g.edge_count());
    for (int s = 3; s <= 5; ++s) CHECK(count_cliques(g, s) == oracles::brute_clique_count(g, s));
  }
}

TEST_CASE("disintegration") {
  CHECK(disintegration(oracles::cycle_graph(7), 2).empty());
  CHECK(disintegration(oracles::complete_graph(5), 3) == VertexSet::full(5));
  CHECK(disintegration(oracles::complete_graph(5), 4).empty());

  Graph h = build_h({12, 9, 3});
  VertexSet ac;
  for (int v : {0, 1, 2, 9, 10, 11}) ac.add(v);
  CHECK(disintegration(h, 3) == ac);

  // order independence: peel in random orders and compare
  std::uint64_t state = 0xabcdef;
  auto rnd = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::uint64_t keep = VertexSet::full(h.n).bits;
    for (;;) {
      std::vector<int> low;
      for (std::uint64_t m = keep; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (std::popcount(h.adj[v] & keep) <= 3) low.push_back(v);
      }
      if (low.empty()) break;
      keep &= ~(1ull << low[rnd() % low.size()]);  // delete one at a time, random order
    }
    CHECK(VertexSet(keep) == ac);
  }
}

TEST_CASE("star forests") {
  // K_{1,5} + K_2 + K_1
  Graph f(9);
  for (int leaf = 1; leaf <= 5; ++leaf) f.add_edge(0, leaf);
  f.add_edge(6, 7);
  CHECK(is_star_forest(f));
  CHECK_FALSE(is_star_forest(oracles::cycle_graph(3)));
  CHECK_FALSE(is_star_forest(oracles::path_graph(4)));  // P4 has two branch vertices

  auto w = star_forest_after_deletion(oracles::complete_graph(3), 1);
  REQUIRE(w);
  CHECK(w->to_vector() == std::vector<int>{0});

  Graph h = build_h({12, 9, 3});
  VertexSet drop;
  for (int v : {0, 1, 2}) drop.add(v);
  CHECK_FALSE(is_star_forest(without_vertices(h, drop)));  // C stays a triangle
  CHECK_FALSE(star_forest_after_deletion(h, 3));
  auto w4 = star_forest_after_deletion(h, 4);
  REQUIRE(w4);
  CHECK(w4->to_vector() == std::vector<int>{0, 1, 2, 9});
}

TEST_CASE("subgraph containment") {
  auto emb = contains_subgraph(oracles::complete_graph(5), oracles::cycle_graph(5));
  REQUIRE(emb);
  CHECK_FALSE(contains_subgraph(oracles::cycle_graph(6), oracles::complete_graph(3)));

  // embeddings carry pattern edges onto host edges
  Graph host = oracles::petersen();
  Graph pat = oracles::cycle_graph(9);
  auto e2 = contains_subgraph(host, pat);
  REQUIRE(e2);
  for (auto [u, v] : pat.edges()) CHECK(host.has_edge((*e2)[u], (*e2)[v]));
  CHECK_FALSE(contains_subgraph(host, oracles::cycle_graph(10)));

  std::vector<Graph> members{oracles::cycle_graph(10), oracles::cycle_graph(9)};
  auto hit = find_first_embedding(host, members);
  REQUIRE(hit);
  CHECK(hit->first == 1);
}

TEST_CASE("crossing pairs") {
  Graph c6 = oracles::cycle_graph(6);
  auto an = crossing_pairs(c6, Path{{0, 1, 2, 3, 4, 5}});
  CHECK(an.pairs.empty());  // endpoint adjacency via the closing edge does not count
  REQUIRE(an.s_pos);
  CHECK(*an.s_pos == 3);  // interior neighbor of x_m sits right after x_s
  REQUIRE(an.t_pos);
  CHECK(*an.t_pos == 2);

  Graph k4 = oracles::complete_graph(4);
  auto ak = crossing_pairs(k4, Path{{0, 1, 2, 3}});
  REQUIRE(ak.pairs.size() == 1);
  CHECK(ak.pairs[0].i == 1);
  CHECK(ak.pairs[0].j == 2);
  CHECK(ak.pairs[0].minimal);
  CHECK(*ak.s_pos == 0);
  CHECK(*ak.t_pos == 3);
}

TEST_CASE("greedy maximal paths are maximal") {
  for (const Graph& g : enumerate_two_connected(5)) {
    for (int v = 0; v < g.n; ++v) {
      Path p = greedy_maximal_path(g, v);
      CHECK(is_path(g, p));
      std::uint64_t used = 0;
      for (int x : p.v) used |= 1ull << x;
      CHECK((g.adj[p.v.front()] & ~used) == 0);
      CHECK((g.adj[p.v.back()] & ~used) == 0);
    }
  }
}
