#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

/// Exact longest cycle with witness; nullopt iff the graph is acyclic.
std::optional<std::pair<int, CycleWitness>> circumference(const Graph& g);

/// Exact longest cycle length among cycles that use the edge ab;
/// nullopt if ab lies on no cycle. Throws InvalidInput when ab is a non-edge.
std::optional<int> longest_cycle_through_edge(const Graph& g, int a, int b);
std::optional<CycleWitness> longest_cycle_through_edge_witness(const Graph& g, int a, int b);

/// Bit L set iff some cycle on exactly L vertices uses edge ab.
std::uint64_t cycle_lengths_through_edge(const Graph& g, int a, int b);

/// Exact maximum-vertex-count path whose two endpoints both lie in S
/// (a single vertex of S counts as a trivial path).
std::optional<std::pair<int, Path>> longest_s_path(const Graph& g, VertexSet s);

/// Vertex count of the longest path from a to b (nullopt when unreachable).
std::optional<int> longest_path_between(const Graph& g, int a, int b);

/// Is there a Hamilton path starting in A and ending in B?
bool hamilton_path_between_sets(const Graph& g, VertexSet a, VertexSet b);

/// Number of s-cliques (exact); clique_profile returns all sizes at once.
long long count_cliques(const Graph& g, int s);
std::vector<long long> clique_profile(const Graph& g);

/// Order of a maximum clique (Bron-Kerbosch with pivoting).
int clique_number(const Graph& g);

/// Unique maximal vertex set whose induced subgraph has min degree >= alpha+1
/// (repeatedly peel vertices of degree <= alpha). May be empty.
VertexSet disintegration(const Graph& g, int alpha);

/// Crossing pair of a path x1..xm: interior positions i < j with
/// x_i ~ x_m and x_j ~ x_1. Positions are 0-based here.
struct CrossingPair {
  int i = 0;
  int j = 0;
  bool minimal = false;
};

struct CrossingAnalysis {
  std::vector<CrossingPair> pairs;  // sorted by (i, j)
  std::optional<int> s_pos;         // 0-based index of x_s, s = min{h : x_{h+1} ~ x_m}
  std::optional<int> t_pos;         // 0-based index of x_t, t = max{h : x_{h-1} ~ x_1}
};

CrossingAnalysis crossing_pairs(const Graph& g, const Path& p);

/// Cycle produced by rotation on a crossing pair, or by a detour path when no
/// crossing pair exists. guarantee = min{m, d_P(x1)+d_P(xm) (+1 if the extreme
/// neighbor positions coincide, +2 if they are inverted)}.
struct PosaResult {
  CycleWitness cycle;
  int guarantee = 0;
  bool used_detour = false;
  bool used_fallback = false;  // exact-solver fallback; sweeps expect never
};

PosaResult posa_cycle(const Graph& g, const Path& p);

/// Deterministic maximal path: extend at the back, then at the front, always
/// taking the smallest-index unvisited neighbor.
Path greedy_maximal_path(const Graph& g, int start);

/// Every component is a star (isolated vertices allowed).
bool is_star_forest(const Graph& g);

/// Smallest vertex set (size first, then lexicographic) of size <= bound
/// whose removal leaves a star forest; nullopt if none.
std::optional<VertexSet> star_forest_after_deletion(const Graph& g, int bound);

/// Injective map pattern vertex -> host vertex carrying edges to edges
/// (plain subgraph containment, not induced).
using Embedding = std::vector<int>;

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern);

/// First member (in the given order) that embeds into g.
std::optional<std::pair<int, Embedding>> find_first_embedding(const Graph& g,
                                                              std::span<const Graph> members);

}  // namespace egstab
