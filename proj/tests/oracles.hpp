#pragma once

// Test-side reference implementations. These stay independent of the library
// solvers they are used to check: plain permutation search and subset loops.

#include <algorithm>
#include <numeric>
#include <vector>

#include "egstab/graph.hpp"

namespace oracles {

using egstab::Graph;

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u)
      for (int v = u + 1; v < a.n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// longest cycle by checking every vertex subset and every cyclic order
inline int naive_circumference(const Graph& g) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.n); ++mask) {
    int size = std::popcount(mask);
    if (size < 3 || size <= best) continue;
    std::vector<int> verts;
    for (std::uint64_t m = mask; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    std::vector<int> perm(verts.begin() + 1, verts.end());
    std::sort(perm.begin(), perm.end());
    do {
      int prev = verts[0];
      bool ok = true;
      for (int v : perm) {
        if (!g.has_edge(prev, v)) {
          ok = false;
          break;
        }
        prev = v;
      }
      if (ok && g.has_edge(prev, verts[0])) {
        best = size;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

inline long long brute_clique_count(const Graph& g, int s) {
  if (s == 0) return 1;
  long long count = 0;
  std::vector<int> idx(s);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.n); ++mask) {
    if (std::popcount(mask) != s) continue;
    bool ok = true;
    std::vector<int> verts;
    for (std::uint64_t m = mask; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    for (std::size_t i = 0; i < verts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < verts.size() && ok; ++j)
        ok = g.has_edge(verts[i], verts[j]);
    count += ok;
  }
  return count;
}

inline Graph petersen() {
  return egstab::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                 {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return egstab::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return egstab::from_edges(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return egstab::from_edges(n, edges);
}

inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Graph> out;
  int bits = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
    Graph g(n);
    int b = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if ((mask >> b) & 1) g.add_edge(i, j);
        ++b;
      }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracles
