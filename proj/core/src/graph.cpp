#include "egstab/graph.hpp"

#include <algorithm>

namespace egstab {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxVertices) throw CapacityExceeded("vertex count must be 1..64");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse in the bitsets
  return g;
}

bool is_path(const Graph& g, const Path& p) {
  VertexSet seen;
  for (std::size_t i = 0; i < p.v.size(); ++i) {
    int x = p.v[i];
    if (x < 0 || x >= g.n || seen.contains(x)) return false;
    seen.add(x);
    if (i > 0 && !g.has_edge(p.v[i - 1], x)) return false;
  }
  return !p.v.empty();
}

bool is_cycle(const Graph& g, const CycleWitness& c) {
  if (c.v.size() < 3) return false;
  Path as_path{c.v};
  return is_path(g, as_path) && g.has_edge(c.v.back(), c.v.front());
}

VertexSet reach(const Graph& g, int from, VertexSet allowed) {
  if (!allowed.contains(from)) return VertexSet();
  std::uint64_t seen = 1ull << from;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= g.adj[std::countr_zero(m)];
    next &= allowed.bits & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  return reach(g, 0, g.vertices()).count() == g.n;
}

bool is_two_connected(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.n; ++v) {
    VertexSet rest = g.vertices();
    rest.remove(v);
    if (reach(g, rest.min(), rest).count() != g.n - 1) return false;  // v cuts
  }
  return true;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw InvalidInput("induced subgraph of empty set");
  if ((s.bits & ~g.vertices().bits) != 0) throw InvalidInput("set has bits outside graph");
  std::vector<int> map = s.to_vector();
  Graph out(static_cast<int>(map.size()));
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = i + 1; j < map.size(); ++j)
      if (g.has_edge(map[i], map[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {out, map};
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (std::uint64_t m = g.adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
      out.add_edge(perm[u], perm[std::countr_zero(m)]);
  return out;
}

Graph with_edge(const Graph& g, int u, int v) {
  Graph out = g;
  out.add_edge(u, v);
  return out;
}

Graph without_vertices(const Graph& g, VertexSet drop) {
  VertexSet keep = g.vertices() & ~drop;
  if (keep.empty()) return Graph(0);
  return induced_subgraph(g, keep).first;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.n + h.n > kMaxVertices) throw CapacityExceeded("union exceeds 64 vertices");
  Graph out(g.n + h.n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.n + u, g.n + v);
  return out;
}

int min_degree(const Graph& g) {
  int d = g.n;
  for (int v = 0; v < g.n; ++v) d = std::min(d, g.degree(v));
  return d;
}

}  // namespace egstab
