#include "egstab/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace egstab {

namespace {

constexpr int kDpMax = 20;

std::uint64_t above(int v) { return v >= 63 ? 0 : ~0ull << (v + 1); }

// ends[mask]: endpoints of paths whose vertex set is exactly mask and whose
// start lies in `starts`.
std::vector<std::uint64_t> path_ends(const Graph& g, std::uint64_t starts) {
  if (g.n > kDpMax) throw CapacityExceeded("path solver capped at 20 vertices");
  std::vector<std::uint64_t> ends(std::size_t(1) << g.n, 0);
  for (std::uint64_t m = starts; m; m &= m - 1) {
    int v = std::countr_zero(m);
    ends[std::uint64_t(1) << v] = std::uint64_t(1) << v;
  }
  std::uint64_t full = VertexSet::full(g.n).bits;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint64_t e = ends[mask];
    if (!e) continue;
    for (std::uint64_t me = e; me; me &= me - 1) {
      int v = std::countr_zero(me);
      for (std::uint64_t mx = g.adj[v] & ~mask; mx; mx &= mx - 1) {
        int w = std::countr_zero(mx);
        ends[mask | (std::uint64_t(1) << w)] |= std::uint64_t(1) << w;
      }
    }
  }
  return ends;
}

// Variant for cycles: paths start at the lowest vertex of mask and never
// visit anything below it, so each cycle is seen once from its minimum.
std::vector<std::uint64_t> anchored_ends(const Graph& g) {
  if (g.n > kDpMax) throw CapacityExceeded("cycle solver capped at 20 vertices");
  std::vector<std::uint64_t> ends(std::size_t(1) << g.n, 0);
  for (int v = 0; v < g.n; ++v) ends[std::uint64_t(1) << v] = std::uint64_t(1) << v;
  std::uint64_t full = VertexSet::full(g.n).bits;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint64_t e = ends[mask];
    if (!e) continue;
    int anchor = std::countr_zero(mask);
    for (std::uint64_t me = e; me; me &= me - 1) {
      int v = std::countr_zero(me);
      for (std::uint64_t mx = g.adj[v] & ~mask & above(anchor); mx; mx &= mx - 1) {
        int w = std::countr_zero(mx);
        ends[mask | (std::uint64_t(1) << w)] |= std::uint64_t(1) << w;
      }
    }
  }
  return ends;
}

// Path from its start to v over exactly mask, walking predecessors.
std::vector<int> rebuild_path(const Graph& g, const std::vector<std::uint64_t>& ends,
                              std::uint64_t mask, int v) {
  std::vector<int> seq{v};
  while (std::popcount(mask) > 1) {
    std::uint64_t pm = mask & ~(std::uint64_t(1) << v);
    std::uint64_t cand = ends[pm] & g.adj[v];
    int u = std::countr_zero(cand);  // smallest predecessor keeps this deterministic
    seq.push_back(u);
    mask = pm;
    v = u;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

void clique_rec(const Graph& g, std::uint64_t cand, int depth, std::vector<long long>& out) {
  for (std::uint64_t m = cand; m; m &= m - 1) {
    int v = std::countr_zero(m);
    ++out[depth + 1];
    std::uint64_t next = cand & g.adj[v] & above(v);
    if (next) clique_rec(g, next, depth + 1, out);
  }
}

void bk_rec(const Graph& g, int depth, std::uint64_t p, std::uint64_t x, int& best) {
  if (!p && !x) {
    best = std::max(best, depth);
    return;
  }
  if (depth + std::popcount(p) <= best) return;
  std::uint64_t px = p | x;
  int pivot = -1, best_cover = -1;
  for (std::uint64_t m = px; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int cover = std::popcount(p & g.adj[u]);
    if (cover > best_cover) {
      best_cover = cover;
      pivot = u;
    }
  }
  for (std::uint64_t m = p & ~g.adj[pivot]; m; m &= m - 1) {
    int v = std::countr_zero(m);
    bk_rec(g, depth + 1, p & g.adj[v], x & g.adj[v], best);
    p &= ~(std::uint64_t(1) << v);
    x |= std::uint64_t(1) << v;
  }
}

// DFS exact longest cycle for graphs past the DP cap; rarely used.
struct CycleDfs {
  const Graph& g;
  int best_len = 0;
  std::vector<int> best_cycle, cur;
  std::uint64_t allowed = 0;

  explicit CycleDfs(const Graph& graph) : g(graph) {}

  void extend(int anchor, int v, std::uint64_t visited) {
    if ((g.adj[v] >> anchor & 1) && static_cast<int>(cur.size()) >= 3 &&
        static_cast<int>(cur.size()) > best_len) {
      best_len = static_cast<int>(cur.size());
      best_cycle = cur;
    }
    if (static_cast<int>(cur.size()) + std::popcount(allowed & ~visited) <= best_len) return;
    for (std::uint64_t m = g.adj[v] & allowed & ~visited; m; m &= m - 1) {
      int w = std::countr_zero(m);
      cur.push_back(w);
      extend(anchor, w, visited | (std::uint64_t(1) << w));
      cur.pop_back();
    }
  }

  void run() {
    for (int a = 0; a < g.n; ++a) {
      allowed = (~0ull << a) & VertexSet::full(g.n).bits;
      cur = {a};
      extend(a, a, std::uint64_t(1) << a);
    }
  }
};

}  // namespace

std::optional<std::pair<int, CycleWitness>> circumference(const Graph& g) {
  if (g.n < 3) return std::nullopt;
  if (g.n > kDpMax) {
    CycleDfs dfs(g);
    dfs.run();
    if (dfs.best_len < 3) return std::nullopt;
    return std::make_pair(dfs.best_len, CycleWitness{dfs.best_cycle});
  }
  auto ends = anchored_ends(g);
  std::uint64_t full = VertexSet::full(g.n).bits;
  int best_len = 0, best_v = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) < 3 || std::popcount(mask) <= best_len) continue;
    std::uint64_t e = ends[mask];
    if (!e) continue;
    int anchor = std::countr_zero(mask);
    std::uint64_t closing = e & g.adj[anchor];
    if (!closing) continue;
    best_len = std::popcount(mask);
    best_mask = mask;
    best_v = std::countr_zero(closing);
  }
  if (best_len < 3) return std::nullopt;
  return std::make_pair(best_len, CycleWitness{rebuild_path(g, ends, best_mask, best_v)});
}

std::uint64_t cycle_lengths_through_edge(const Graph& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || !g.has_edge(a, b))
    throw InvalidInput("cycle through edge: ab must be an edge");
  auto ends = path_ends(g, std::uint64_t(1) << a);
  std::uint64_t full = VertexSet::full(g.n).bits;
  std::uint64_t lengths = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) < 3) continue;
    if (ends[mask] >> b & 1) lengths |= std::uint64_t(1) << std::popcount(mask);
  }
  return lengths;
}

std::optional<int> longest_cycle_through_edge(const Graph& g, int a, int b) {
  std::uint64_t lengths = cycle_lengths_through_edge(g, a, b);
  if (!lengths) return std::nullopt;
  return 63 - std::countl_zero(lengths);
}

std::optional<CycleWitness> longest_cycle_through_edge_witness(const Graph& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || !g.has_edge(a, b))
    throw InvalidInput("cycle through edge: ab must be an edge");
  auto ends = path_ends(g, std::uint64_t(1) << a);
  std::uint64_t full = VertexSet::full(g.n).bits;
  int best_len = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int len = std::popcount(mask);
    if (len < 3 || len <= best_len) continue;
    if (ends[mask] >> b & 1) {
      best_len = len;
      best_mask = mask;
    }
  }
  if (!best_len) return std::nullopt;
  return CycleWitness{rebuild_path(g, ends, best_mask, b)};
}

std::optional<std::pair<int, Path>> longest_s_path(const Graph& g, VertexSet s) {
  std::uint64_t starts = s.bits & VertexSet::full(g.n).bits;
  if (!starts) throw InvalidInput("longest_s_path needs a nonempty S");
  auto ends = path_ends(g, starts);
  std::uint64_t full = VertexSet::full(g.n).bits;
  int best_len = 0, best_v = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int len = std::popcount(mask);
    if (len <= best_len) continue;
    std::uint64_t hit = ends[mask] & starts;
    if (hit) {
      best_len = len;
      best_mask = mask;
      best_v = std::countr_zero(hit);
    }
  }
  if (best_v < 0) return std::nullopt;
  return std::make_pair(best_len, Path{rebuild_path(g, ends, best_mask, best_v)});
}

std::optional<int> longest_path_between(const Graph& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n) throw InvalidInput("vertex out of range");
  if (a == b) return 1;
  auto ends = path_ends(g, std::uint64_t(1) << a);
  std::uint64_t full = VertexSet::full(g.n).bits;
  int best = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask)
    if (ends[mask] >> b & 1) best = std::max(best, std::popcount(mask));
  if (!best) return std::nullopt;
  return best;
}

bool hamilton_path_between_sets(const Graph& g, VertexSet a, VertexSet b) {
  std::uint64_t starts = a.bits & VertexSet::full(g.n).bits;
  if (!starts) return false;
  auto ends = path_ends(g, starts);
  return (ends[VertexSet::full(g.n).bits] & b.bits) != 0;
}

std::vector<long long> clique_profile(const Graph& g) {
  std::vector<long long> out(g.n + 2, 0);
  out[0] = 1;
  if (g.n > 0) clique_rec(g, VertexSet::full(g.n).bits, 0, out);
  return out;
}

long long count_cliques(const Graph& g, int s) {
  if (s < 0) return 0;
  if (s == 0) return 1;
  if (s > g.n) return 0;
  auto prof = clique_profile(g);
  return prof[s];
}

int clique_number(const Graph& g) {
  if (g.n == 0) return 0;
  int best = 0;
  bk_rec(g, 0, VertexSet::full(g.n).bits, 0, best);
  return best;
}

VertexSet disintegration(const Graph& g, int alpha) {
  if (alpha < 0) throw InvalidInput("disintegration needs alpha >= 0");
  std::uint64_t cur = VertexSet::full(g.n).bits;
  for (;;) {
    std::uint64_t low = 0;
    for (std::uint64_t m = cur; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (std::popcount(g.adj[v] & cur) <= alpha) low |= std::uint64_t(1) << v;
    }
    if (!low) return VertexSet(cur);
    cur &= ~low;
    if (!cur) return VertexSet(0);
  }
}

CrossingAnalysis crossing_pairs(const Graph& g, const Path& p) {
  if (!is_path(g, p)) throw InvalidInput("crossing_pairs needs a valid path");
  CrossingAnalysis out;
  int m = p.size();
  if (m < 3) return out;
  int first = p.v.front(), last = p.v.back();
  std::vector<int> adj_last, adj_first;  // interior positions only
  for (int h = 1; h <= m - 2; ++h) {
    if (g.has_edge(p.v[h], last)) adj_last.push_back(h);
    if (g.has_edge(p.v[h], first)) adj_first.push_back(h);
  }
  if (!adj_last.empty()) out.s_pos = adj_last.front() - 1;
  if (!adj_first.empty()) out.t_pos = adj_first.back() + 1;
  std::vector<bool> endpoint_nbr(m, false);
  for (int h : adj_last) endpoint_nbr[h] = true;
  for (int h : adj_first) endpoint_nbr[h] = true;
  for (int i : adj_last)
    for (int j : adj_first) {
      if (i >= j) continue;
      bool minimal = true;
      for (int h = i + 1; h < j && minimal; ++h) minimal = !endpoint_nbr[h];
      out.pairs.push_back({i, j, minimal});
    }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const CrossingPair& a, const CrossingPair& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  return out;
}

namespace {

// Shortest path from s to t whose interior avoids the host path.
std::optional<std::vector<int>> detour_path(const Graph& g, std::uint64_t pmask, int s, int t) {
  std::uint64_t allowed = (~pmask | (std::uint64_t(1) << s) | (std::uint64_t(1) << t)) &
                          VertexSet::full(g.n).bits;
  std::vector<int> from(g.n, -2);
  std::deque<int> queue{s};
  from[s] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (std::uint64_t m = g.adj[v] & allowed; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (from[w] != -2 || (w == s)) continue;
      from[w] = v;
      queue.push_back(w);
    }
  }
  if (from[t] == -2) return std::nullopt;
  std::vector<int> path{t};
  for (int v = from[t]; v != -1; v = from[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

namespace {

// Cycle candidates of one fixed path: close the ends, rotate on a minimal
// crossing pair, or route a detour through a path meeting P at exactly two
// vertices. Returns the first cycle of length >= want under the documented
// tie-breaks (lexicographically smallest qualifying pair; shortest detour,
// smallest endpoints).
std::optional<std::pair<std::vector<int>, bool>> posa_candidates(const Graph& g,
                                                                 const std::vector<int>& pv,
                                                                 int want) {
  int m = static_cast<int>(pv.size());
  int first = pv.front(), last = pv.back();
  if (g.has_edge(first, last) && m >= 3 && m >= want)
    return std::make_pair(pv, false);

  auto analysis = crossing_pairs(g, Path{pv});
  for (const auto& cp : analysis.pairs) {  // sorted by (i, j)
    if (!cp.minimal) continue;
    int len = m - (cp.j - cp.i - 1);
    if (len < want || len < 3) continue;
    std::vector<int> cyc(pv.begin(), pv.begin() + cp.i + 1);
    for (int h = m - 1; h >= cp.j; --h) cyc.push_back(pv[h]);
    return std::make_pair(std::move(cyc), false);
  }

  std::uint64_t pmask = 0;
  for (int v : pv) pmask |= std::uint64_t(1) << v;
  struct Cand {
    int qlen, u, v;
    std::vector<int> cycle;
  };
  std::optional<Cand> best;
  for (int u = 0; u < m - 1; ++u) {
    for (int v = u + 1; v < m; ++v) {
      int p_pos = -1, q_pos = -1;
      for (int h = u + 1; h < m; ++h)
        if (g.has_edge(pv[h], first)) {
          p_pos = h;
          break;
        }
      for (int h = v - 1; h >= 0; --h)
        if (g.has_edge(pv[h], last)) {
          q_pos = h;
          break;
        }
      if (p_pos < 0 || q_pos < 0 || p_pos > q_pos || p_pos <= u || q_pos >= v) continue;
      auto q = detour_path(g, pmask, pv[u], pv[v]);
      if (!q) continue;
      std::vector<int> cyc(pv.begin(), pv.begin() + u + 1);
      for (std::size_t h = 1; h + 1 < q->size(); ++h) cyc.push_back((*q)[h]);
      for (int h = v; h < m; ++h) cyc.push_back(pv[h]);
      for (int h = q_pos; h >= p_pos; --h) cyc.push_back(pv[h]);
      int len = static_cast<int>(cyc.size());
      if (len < want || len < 3) continue;
      int qlen = static_cast<int>(q->size()) - 2;
      if (!best || qlen < best->qlen ||
          (qlen == best->qlen && std::make_pair(u, v) < std::make_pair(best->u, best->v)))
        best = Cand{qlen, u, v, std::move(cyc)};
    }
  }
  if (best) return std::make_pair(std::move(best->cycle), true);
  return std::nullopt;
}

}  // namespace

PosaResult posa_cycle(const Graph& g, const Path& p) {
  if (!is_two_connected(g)) throw InvalidInput("posa_cycle needs a 2-connected graph");
  if (!is_path(g, p) || p.size() < 2) throw InvalidInput("posa_cycle needs a path on >= 2 vertices");
  int m = p.size();
  int first = p.v.front(), last = p.v.back();
  std::uint64_t pmask = 0;
  for (int v : p.v) pmask |= std::uint64_t(1) << v;
  int d1 = std::popcount(g.adj[first] & pmask);
  int dm = std::popcount(g.adj[last] & pmask);
  int i_raw = m, j_raw = -1;
  for (int h = 0; h < m; ++h) {
    if (g.has_edge(p.v[h], last)) {
      i_raw = h;
      break;
    }
  }
  for (int h = m - 1; h >= 0; --h) {
    if (g.has_edge(p.v[h], first)) {
      j_raw = h;
      break;
    }
  }
  int extra = j_raw < i_raw ? 2 : (j_raw == i_raw ? 1 : 0);
  PosaResult res;
  res.guarantee = std::min(m, d1 + dm + extra);

  if (m == 2) {  // guarantee is vacuous; hand back a shortest cycle on the edge
    auto ends = path_ends(g, std::uint64_t(1) << first);
    std::uint64_t full = VertexSet::full(g.n).bits;
    for (int len = 3; len <= g.n; ++len) {
      for (std::uint64_t mask = 1; mask <= full; ++mask)
        if (std::popcount(mask) == len && (ends[mask] >> last & 1)) {
          res.cycle = CycleWitness{rebuild_path(g, ends, mask, last)};
          return res;
        }
    }
    throw InvalidInput("edge lies on no cycle");  // impossible in a 2-connected graph
  }

  // Breadth-first over the rotation closure of P: rotating on an end edge
  // x_end x_h turns x1..xm into x1..x_h x_end..x_{h+1} with a new endpoint,
  // keeping the vertex set. Most paths succeed at the root node.
  std::deque<std::vector<int>> queue{p.v};
  std::set<std::vector<int>> seen{p.v};
  {
    std::vector<int> rev(p.v.rbegin(), p.v.rend());
    if (seen.insert(rev).second) queue.push_back(std::move(rev));
  }
  constexpr std::size_t kRotationCap = 4096;
  std::size_t processed = 0;
  while (!queue.empty() && processed < kRotationCap) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    ++processed;
    if (auto hit = posa_candidates(g, cur, res.guarantee)) {
      res.cycle = CycleWitness{std::move(hit->first)};
      res.used_detour = hit->second || cur != p.v;
      return res;
    }
    // expand: rotations at the tail, then at the head (via the reversal)
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<int> base = cur;
      if (dir == 1) std::reverse(base.begin(), base.end());
      int mm = static_cast<int>(base.size());
      for (int h = 0; h + 2 < mm; ++h) {
        if (!g.has_edge(base[h], base[mm - 1])) continue;
        std::vector<int> rot(base.begin(), base.begin() + h + 1);
        for (int t = mm - 1; t > h; --t) rot.push_back(base[t]);
        if (seen.insert(rot).second) queue.push_back(std::move(rot));
      }
    }
  }

  auto circ = circumference(g);
  if (circ && circ->first >= res.guarantee) {
    res.cycle = circ->second;
    res.used_fallback = true;
    return res;
  }
  throw std::logic_error("posa_cycle: no qualifying cycle found");
}

Path greedy_maximal_path(const Graph& g, int start) {
  if (start < 0 || start >= g.n) throw InvalidInput("start vertex out of range");
  std::deque<int> seq{start};
  std::uint64_t used = std::uint64_t(1) << start;
  for (;;) {
    std::uint64_t ext = g.adj[seq.back()] & ~used;
    if (!ext) break;
    int w = std::countr_zero(ext);
    seq.push_back(w);
    used |= std::uint64_t(1) << w;
  }
  for (;;) {
    std::uint64_t ext = g.adj[seq.front()] & ~used;
    if (!ext) break;
    int w = std::countr_zero(ext);
    seq.push_front(w);
    used |= std::uint64_t(1) << w;
  }
  return Path{std::vector<int>(seq.begin(), seq.end())};
}

bool is_star_forest(const Graph& g) {
  std::uint64_t todo = VertexSet::full(g.n).bits;
  while (todo) {
    int a = std::countr_zero(todo);
    std::uint64_t comp = reach(g, a, VertexSet(todo)).bits;
    todo &= ~comp;
    int verts = std::popcount(comp);
    int twice_edges = 0, big = 0;
    for (std::uint64_t m = comp; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(g.adj[v] & comp);
      twice_edges += d;
      big += d >= 2;
    }
    if (twice_edges / 2 != verts - 1 || big > 1) return false;
  }
  return true;
}

std::optional<VertexSet> star_forest_after_deletion(const Graph& g, int bound) {
  if (bound < 0) throw InvalidInput("bound must be >= 0");
  for (int size = 0; size <= std::min(bound, g.n); ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      VertexSet drop;
      for (int v : idx) drop.add(v);
      if (size == g.n || is_star_forest(without_vertices(g, drop))) return drop;
      int i = size - 1;
      while (i >= 0 && idx[i] == g.n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

struct EmbedSearch {
  const Graph& host;
  const Graph& pat;
  std::vector<int> order;              // pattern vertices in match order
  std::vector<std::uint64_t> feasible; // static candidate mask per pattern vertex
  std::vector<int> map;                // pattern -> host
  std::uint64_t used = 0;

  EmbedSearch(const Graph& h, const Graph& p) : host(h), pat(p) {}

  static std::vector<int> sorted_nbr_degrees(const Graph& g, int v) {
    std::vector<int> out;
    for (std::uint64_t m = g.adj[v]; m; m &= m - 1) out.push_back(g.degree(std::countr_zero(m)));
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  bool prepare() {
    feasible.assign(pat.n, 0);
    std::vector<std::vector<int>> host_nd(host.n);
    for (int w = 0; w < host.n; ++w) host_nd[w] = sorted_nbr_degrees(host, w);
    for (int v = 0; v < pat.n; ++v) {
      auto pd = sorted_nbr_degrees(pat, v);
      for (int w = 0; w < host.n; ++w) {
        if (host.degree(w) < pat.degree(v)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pd.size() && ok; ++i) ok = pd[i] <= host_nd[w][i];
        if (ok) feasible[v] |= std::uint64_t(1) << w;
      }
      if (!feasible[v]) return false;
    }
    // connectivity-first order: highest degree start, then most-mapped-neighbors
    std::vector<bool> placed(pat.n, false);
    for (int step = 0; step < pat.n; ++step) {
      int best = -1, best_conn = -1, best_deg = -1;
      for (int v = 0; v < pat.n; ++v) {
        if (placed[v]) continue;
        int conn = 0;
        for (int u : order)
          if (pat.has_edge(u, v)) ++conn;
        if (conn > best_conn || (conn == best_conn && pat.degree(v) > best_deg)) {
          best = v;
          best_conn = conn;
          best_deg = pat.degree(v);
        }
      }
      order.push_back(best);
      placed[best] = true;
    }
    return true;
  }

  bool rec(int depth) {
    if (depth == pat.n) return true;
    int v = order[depth];
    std::uint64_t cand = feasible[v] & ~used;
    for (int t = 0; t < depth; ++t) {
      int u = order[t];
      if (pat.has_edge(u, v)) cand &= host.adj[map[u]];
    }
    for (std::uint64_t m = cand; m; m &= m - 1) {
      int w = std::countr_zero(m);
      map[v] = w;
      used |= std::uint64_t(1) << w;
      if (rec(depth + 1)) return true;
      used &= ~(std::uint64_t(1) << w);
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.n > host.n || pattern.edge_count() > host.edge_count()) return std::nullopt;
  if (pattern.n == 0) return Embedding{};
  EmbedSearch search(host, pattern);
  if (!search.prepare()) return std::nullopt;
  search.map.assign(pattern.n, -1);
  if (!search.rec(0)) return std::nullopt;
  return search.map;
}

std::optional<std::pair<int, Embedding>> find_first_embedding(const Graph& g,
                                                              std::span<const Graph> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (auto emb = contains_subgraph(g, members[i]))
      return std::make_pair(static_cast<int>(i), std::move(*emb));
  return std::nullopt;
}

}  // namespace egstab
