#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace egstab {

inline constexpr int kMaxVertices = 64;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CapacityExceeded : std::length_error {
  using std::length_error::length_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Set of vertex indices packed into one machine word.
struct VertexSet {
  std::uint64_t bits = 0;

  VertexSet() = default;
  explicit VertexSet(std::uint64_t b) : bits(b) {}

  static VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
  }
  static VertexSet single(int v) { return VertexSet(1ull << v); }

  bool contains(int v) const { return (bits >> v) & 1; }
  void add(int v) { bits |= 1ull << v; }
  void remove(int v) { bits &= ~(1ull << v); }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  int min() const { return std::countr_zero(bits); }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  VertexSet operator~() const { return VertexSet(~bits); }
  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

/// Simple undirected graph on at most 64 labeled vertices, stored as one
/// adjacency bitset row per vertex. Values are treated as immutable once
/// built; every operation hands back a fresh Graph.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[v] bit u set iff uv is an edge

  Graph() = default;
  explicit Graph(int vertices) : n(vertices), adj(vertices, 0) {
    if (vertices < 0 || vertices > kMaxVertices)
      throw CapacityExceeded("graph supports 0..64 vertices");
  }

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }

  void add_edge(int u, int v) {
    if (u == v) throw InvalidInput("loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("endpoint out of range");
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }

  int degree(int v) const { return std::popcount(adj[v]); }
  VertexSet neighbors(int v) const { return VertexSet(adj[v]); }
  VertexSet vertices() const { return VertexSet::full(n); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (std::uint64_t m = adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
        out.emplace_back(u, std::countr_zero(m));
    return out;
  }

  bool operator==(const Graph&) const = default;
};

/// Path as an ordered sequence of distinct vertices; consecutive entries
/// must be adjacent in the host graph (checked by is_path).
struct Path {
  std::vector<int> v;

  int size() const { return static_cast<int>(v.size()); }
};

/// Cyclic sequence of distinct vertices, length at least 3.
struct CycleWitness {
  std::vector<int> v;

  int length() const { return static_cast<int>(v.size()); }
};

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

bool is_path(const Graph& g, const Path& p);
bool is_cycle(const Graph& g, const CycleWitness& c);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

/// Vertices reachable from `from` while staying inside `allowed`.
VertexSet reach(const Graph& g, int from, VertexSet allowed);

/// Induced subgraph on s, relabeled 0..|s|-1 in increasing original index.
/// map[new_index] = original index.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s);

/// Relabel: position perm[v] of the result corresponds to vertex v of g.
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph with_edge(const Graph& g, int u, int v);
Graph without_vertices(const Graph& g, VertexSet drop);  // keeps relative order

/// Disjoint union helper: appends h shifted past g's vertices.
Graph disjoint_union(const Graph& g, const Graph& h);

int min_degree(const Graph& g);

}  // namespace egstab
