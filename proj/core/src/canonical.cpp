#include "egstab/canonical.hpp"

#include <algorithm>
#include <array>

#include "egstab/graph6.hpp"

namespace egstab {

namespace {

using Cells = std::vector<std::uint64_t>;  // ordered partition, one bitmask per cell

// Equitable refinement. Splits cells by neighbor counts into splitter sets
// until stable; new subcells are ordered by count so the cell order depends
// only on the structure, not on the input labeling.
void refine(const Graph& g, Cells& cells, std::vector<std::uint64_t> queue) {
  while (!queue.empty()) {
    std::uint64_t splitter = queue.back();
    queue.pop_back();
    Cells next;
    next.reserve(cells.size());
    for (std::uint64_t cell : cells) {
      if (std::popcount(cell) <= 1) {
        next.push_back(cell);
        continue;
      }
      std::array<std::uint64_t, 65> bucket{};
      int maxc = 0;
      for (std::uint64_t m = cell; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int c = std::popcount(g.adj[v] & splitter);
        bucket[c] |= 1ull << v;
        maxc = std::max(maxc, c);
      }
      int parts = 0;
      for (int c = 0; c <= maxc; ++c) parts += bucket[c] != 0;
      if (parts == 1) {
        next.push_back(cell);
        continue;
      }
      for (int c = 0; c <= maxc; ++c)
        if (bucket[c]) {
          next.push_back(bucket[c]);
          queue.push_back(bucket[c]);
        }
    }
    cells.swap(next);
  }
}

// Upper-triangle bits of the relabeled graph, column by column, packed
// MSB-first so lexicographic word order matches graph6 string order.
std::vector<std::uint64_t> triangle_key(const Graph& g, const std::vector<int>& pos) {
  std::vector<int> at(g.n);
  for (int v = 0; v < g.n; ++v) at[pos[v]] = v;
  std::vector<std::uint64_t> words((static_cast<std::size_t>(g.n) * (g.n - 1) / 2 + 63) / 64, 0);
  int bit = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(at[i], at[j])) words[bit >> 6] |= 0x8000000000000000ull >> (bit & 63);
      ++bit;
    }
  return words;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint64_t> best, first;
  std::vector<int> best_pos, first_pos;
  std::vector<std::vector<int>> autos;  // automorphism generators found so far
  std::vector<int> prefix;              // individualized vertices on this branch

  explicit CanonSearch(const Graph& graph) : g(graph) {}

  void record_auto(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> a_inv(g.n);
    for (int v = 0; v < g.n; ++v) a_inv[a[v]] = v;
    std::vector<int> phi(g.n);
    bool ident = true;
    for (int v = 0; v < g.n; ++v) {
      phi[v] = a_inv[b[v]];
      ident = ident && phi[v] == v;
    }
    if (!ident && autos.size() < 128) autos.push_back(std::move(phi));
  }

  void leaf(const Cells& cells) {
    std::vector<int> pos(g.n);
    for (std::size_t i = 0; i < cells.size(); ++i) pos[std::countr_zero(cells[i])] = static_cast<int>(i);
    auto key = triangle_key(g, pos);
    if (first.empty() && first_pos.empty()) {
      first = key;
      first_pos = pos;
    } else if (key == first) {
      record_auto(first_pos, pos);
    }
    if (best_pos.empty() || key < best) {
      best = key;
      best_pos = pos;
    } else if (key == best && pos != best_pos) {
      record_auto(best_pos, pos);
    }
  }

  // Orbits of the automorphisms that fix every vertex individualized so far.
  UnionFind prefix_orbits() {
    UnionFind uf(g.n);
    for (const auto& phi : autos) {
      bool fixes = true;
      for (int v : prefix)
        if (phi[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < g.n; ++v) uf.unite(v, phi[v]);
    }
    return uf;
  }

  void run(Cells cells) {
    int target = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (std::popcount(cells[i]) > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    for (std::uint64_t m = cells[target]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (!tried.empty()) {
        UnionFind uf = prefix_orbits();
        bool skip = false;
        for (int u : tried)
          if (uf.find(u) == uf.find(v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == target) {
          child.push_back(1ull << v);
          child.push_back(cells[i] & ~(1ull << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix.push_back(v);
      refine(g, child, {1ull << v, cells[target] & ~(1ull << v)});
      run(std::move(child));
      prefix.pop_back();
      tried.push_back(v);
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.n < 1) throw InvalidInput("canonical labeling needs at least one vertex");
  if (g.n == 1) return {0};
  Cells cells{VertexSet::full(g.n).bits};
  refine(g, cells, {cells[0]});
  CanonSearch search(g);
  search.run(std::move(cells));
  return search.best_pos;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_graph(g)); }

std::uint64_t canonical_key(const Graph& g) {
  if (g.n > 11) throw CapacityExceeded("canonical_key packs n <= 11 only");
  Graph c = canonical_graph(g);
  std::uint64_t bits = 0;
  for (int j = 1; j < c.n; ++j)
    for (int i = 0; i < j; ++i) bits = (bits << 1) | (c.has_edge(i, j) ? 1 : 0);
  return (static_cast<std::uint64_t>(c.n) << 55) | bits;
}

Graph graph_from_key(std::uint64_t key) {
  int n = static_cast<int>(key >> 55);
  Graph g(n);
  int nbits = n * (n - 1) / 2;
  int bit = nbits - 1;  // low bit corresponds to the last pair
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if ((key >> bit) & 1) g.add_edge(i, j);
      --bit;
    }
  return g;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace egstab
