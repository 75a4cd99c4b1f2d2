#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "egstab/algorithms.hpp"
#include "egstab/canonical.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/families.hpp"
#include "egstab/formulas.hpp"

// Independent membership oracle: decide from the defining bullets alone,
// quantifying over every (A,B,C,D) split, whether a graph belongs to
// F(m,k,r). Shares only the exact solvers with the library, none of the
// layout generation, so a missed or spurious layout class shows up as a
// set difference.

using namespace egstab;

namespace {

struct Split {
  std::vector<int> A, B, C, D;
};

bool clique_on(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool independent_on(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool joined(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  for (int x : xs)
    for (int y : ys)
      if (!g.has_edge(x, y)) return false;
  return true;
}

bool no_edges_between(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  for (int x : xs)
    for (int y : ys)
      if (g.has_edge(x, y)) return false;
  return true;
}

std::uint64_t mask_of(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= 1ull << v;
  return m;
}

// components of the graph induced on `verts`, each as a vertex list
std::vector<std::vector<int>> induced_components(const Graph& g, const std::vector<int>& verts) {
  std::uint64_t todo = mask_of(verts);
  std::vector<std::vector<int>> comps;
  while (todo) {
    std::uint64_t comp = reach(g, std::countr_zero(todo), VertexSet(todo)).bits;
    todo &= ~comp;
    comps.push_back(VertexSet(comp).to_vector());
  }
  return comps;
}

// is the graph induced on `verts` a single path? returns its two ends
bool induced_path(const Graph& g, const std::vector<int>& verts, int* end1, int* end2) {
  if (verts.empty()) return false;
  std::uint64_t mask = mask_of(verts);
  int deg1 = 0, ends[2] = {-1, -1};
  int edges2 = 0;
  for (int v : verts) {
    int d = std::popcount(g.adj[v] & mask);
    edges2 += d;
    if (d > 2) return false;
    if (d <= 1) {
      if (deg1 < 2) ends[deg1] = v;
      ++deg1;
    }
  }
  if (verts.size() == 1) {
    *end1 = *end2 = verts[0];
    return true;
  }
  if (deg1 != 2 || edges2 / 2 != static_cast<int>(verts.size()) - 1) return false;
  if (induced_components(g, verts).size() != 1) return false;
  *end1 = ends[0];
  *end2 = ends[1];
  return true;
}

bool induced_cycle(const Graph& g, const std::vector<int>& verts) {
  if (verts.size() < 3) return false;
  std::uint64_t mask = mask_of(verts);
  int edges2 = 0;
  for (int v : verts) {
    int d = std::popcount(g.adj[v] & mask);
    if (d != 2) return false;
    edges2 += d;
  }
  return edges2 / 2 == static_cast<int>(verts.size()) &&
         induced_components(g, verts).size() == 1;
}

int a_degree(const Graph& g, int v, const std::vector<int>& A) {
  int d = 0;
  for (int a : A) d += g.has_edge(v, a);
  return d;
}

bool in_set(int v, const std::vector<int>& vs) {
  for (int x : vs)
    if (x == v) return true;
  return false;
}

// D-side bullets shared by Types I and II once the C∪D path shape is known
bool d_bullet(const Graph& g, const Split& sp, int a_size, int r, bool type2, int k) {
  int d_edges = 0;
  std::uint64_t dm = mask_of(sp.D);
  for (int v : sp.D) d_edges += std::popcount(g.adj[v] & dm);
  d_edges /= 2;
  if (sp.C.size() >= 3) {
    if (!type2) return d_edges == 0;
    if (a_size == r + 1) return d_edges == 0;
    if (a_size == r && r == ell(k) - 2 && d_edges == 2) {
      // two independent edges: no shared endpoints
      for (int v : sp.D)
        if (std::popcount(g.adj[v] & dm) > 1) return false;
      return true;
    }
    return a_size == r && d_edges == 1;
  }
  // |C| = 2: a path (maxdeg <= 2, connected, edges = |D|-1)
  for (int v : sp.D)
    if (std::popcount(g.adj[v] & dm) > 2) return false;
  return d_edges == static_cast<int>(sp.D.size()) - 1 &&
         induced_components(g, sp.D).size() == 1;
}

bool member_type1(const Graph& g, const Split& sp, int k, int r) {
  int l = ell(k);
  if (static_cast<int>(sp.A.size()) != r || static_cast<int>(sp.B.size()) != r) return false;
  if (static_cast<int>(sp.C.size()) != l - r + 1) return false;
  if (!clique_on(g, sp.A) || !clique_on(g, sp.B) || !independent_on(g, sp.C)) return false;
  if (!joined(g, sp.A, sp.C) || !joined(g, sp.B, sp.C)) return false;
  if (!no_edges_between(g, sp.A, sp.B) || !no_edges_between(g, sp.A, sp.D) ||
      !no_edges_between(g, sp.B, sp.D))
    return false;
  std::vector<int> cd = sp.C;
  cd.insert(cd.end(), sp.D.begin(), sp.D.end());
  int e1, e2;
  if (!induced_path(g, cd, &e1, &e2)) return false;
  if (!in_set(e1, sp.C) || !in_set(e2, sp.C)) return false;
  return d_bullet(g, sp, r, r, false, k);
}

bool member_type2(const Graph& g, const Split& sp, int k, int r) {
  int l = ell(k);
  int a_size = static_cast<int>(sp.A.size());
  if (a_size != r && a_size != r + 1) return false;
  if (static_cast<int>(sp.B.size()) != r) return false;
  if (static_cast<int>(sp.C.size()) != l - r + 1) return false;
  if (!independent_on(g, sp.C) || !clique_on(g, sp.B) || !joined(g, sp.B, sp.C)) return false;
  std::uint64_t ac = mask_of(sp.A) | mask_of(sp.C);
  for (int a : sp.A)
    if (std::popcount(g.adj[a] & ac) != l) return false;
  for (int b : sp.B)  // degree exactly l in B∪C
    if (std::popcount(g.adj[b] & (mask_of(sp.B) | mask_of(sp.C))) != l) return false;
  if (!no_edges_between(g, sp.A, sp.B) || !no_edges_between(g, sp.A, sp.D) ||
      !no_edges_between(g, sp.B, sp.D))
    return false;
  std::vector<int> cd = sp.C;
  cd.insert(cd.end(), sp.D.begin(), sp.D.end());
  int e1, e2;
  if (!induced_path(g, cd, &e1, &e2)) return false;
  if (!in_set(e1, sp.C) || !in_set(e2, sp.C)) return false;
  if (a_size == r + 1 && (a_degree(g, e1, sp.A) == 0 || a_degree(g, e2, sp.A) == 0)) return false;
  return d_bullet(g, sp, a_size, r, true, k);
}

bool member_type3(const Graph& g, const Split& sp, int k, int r) {
  int l = ell(k);
  if (static_cast<int>(sp.A.size()) != r || static_cast<int>(sp.B.size()) != r) return false;
  if (static_cast<int>(sp.C.size()) != l - r + 1) return false;
  if (!clique_on(g, sp.A) || !clique_on(g, sp.B) || !independent_on(g, sp.C)) return false;
  if (!joined(g, sp.A, sp.C) || !joined(g, sp.B, sp.C)) return false;
  if (!no_edges_between(g, sp.A, sp.B) || !no_edges_between(g, sp.B, sp.D)) return false;

  std::vector<int> cd = sp.C;
  cd.insert(cd.end(), sp.D.begin(), sp.D.end());
  auto comps = induced_components(g, cd);
  if (comps.size() > 2) return false;

  auto total_a_edges = [&](const std::vector<int>& verts) {
    int t = 0;
    for (int v : verts) t += a_degree(g, v, sp.A);
    return t;
  };

  if (comps.size() == 2) {
    for (int variant = 0; variant < 2; ++variant) {
      const auto& first = comps[variant];
      const auto& second = comps[1 - variant];
      int f1, f2, s1, s2;
      if (!induced_path(g, first, &f1, &f2) || !induced_path(g, second, &s1, &s2)) continue;
      // case F1: a C-path plus an isolated x in D with exactly two A edges
      if (second.size() == 1 && in_set(second[0], sp.D) && in_set(f1, sp.C) &&
          in_set(f2, sp.C) && a_degree(g, second[0], sp.A) == 2 &&
          total_a_edges(first) == 0)
        return true;
      // case F3: one path with distinct D ends on distinct single A
      // neighbors, one path with C ends, |D| = l-r+1
      if (static_cast<int>(sp.D.size()) == l - r + 1 && f1 != f2 && in_set(f1, sp.D) &&
          in_set(f2, sp.D) && in_set(s1, sp.C) && in_set(s2, sp.C) &&
          a_degree(g, f1, sp.A) == 1 && a_degree(g, f2, sp.A) == 1) {
        int n1 = -1, n2 = -1;
        for (int a : sp.A) {
          if (g.has_edge(f1, a)) n1 = a;
          if (g.has_edge(f2, a)) n2 = a;
        }
        int rest = total_a_edges(first) + total_a_edges(second) - 2;
        if (n1 != n2 && rest == 0) return true;
      }
    }
    return false;
  }

  // single component: case F2, a path with one end in D hooked to one A vertex
  int e1, e2;
  if (!induced_path(g, cd, &e1, &e2)) return false;
  for (int variant = 0; variant < 2; ++variant) {
    int y = variant ? e2 : e1, other = variant ? e1 : e2;
    if (!in_set(y, sp.D) || !in_set(other, sp.C)) continue;
    if (a_degree(g, y, sp.A) != 1) continue;
    bool rest_clean = true;
    for (int v : cd)
      if (v != y && a_degree(g, v, sp.A) != (in_set(v, sp.C) ? r : 0)) rest_clean = false;
    // y isolated inside D
    if (std::popcount(g.adj[y] & mask_of(sp.D)) != 0) continue;
    if (rest_clean) return true;
  }
  return false;
}

bool member_type4(const Graph& g, const Split& sp, int k, int r) {
  int l = ell(k);
  if (r != l || !sp.D.empty()) return false;
  if (static_cast<int>(sp.A.size()) != l - 1 || static_cast<int>(sp.B.size()) != l - 1)
    return false;
  if (!clique_on(g, sp.A) || !clique_on(g, sp.B) || !no_edges_between(g, sp.A, sp.B))
    return false;
  if (!induced_cycle(g, sp.C)) return false;
  for (int w1 : sp.C)
    for (int w2 : sp.C) {
      if (w1 == w2 || !g.has_edge(w1, w2)) continue;
      for (int w : sp.C) {
        if (w == w1 || w == w2 || g.has_edge(w, w1) || g.has_edge(w, w2)) continue;
        if (!joined(g, {w1}, sp.A) || !joined(g, {w2}, sp.B)) continue;
        if (!joined(g, {w}, sp.A) || !joined(g, {w}, sp.B)) continue;
        bool clean = true;
        for (int c : sp.C) {
          if (c == w || c == w1 || c == w2) continue;
          if (a_degree(g, c, sp.A) || a_degree(g, c, sp.B)) clean = false;
        }
        if (clean) return true;
      }
    }
  return false;
}

// all splits with the given |A|, |B|, |C| (D takes the rest)
template <class Fn>
bool any_split(const Graph& g, int a_size, int b_size, int c_size, const Fn& fn) {
  int n = g.n;
  if (a_size + b_size + c_size > n) return false;
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  std::vector<int> assign(n, 3);  // 0 A, 1 B, 2 C, 3 D
  // choose A, then B, then C by masks
  for (std::uint64_t am = 0; am < (1ull << n); ++am) {
    if (std::popcount(am) != a_size) continue;
    for (std::uint64_t bm = 0; bm < (1ull << n); ++bm) {
      if (std::popcount(bm) != b_size || (am & bm)) continue;
      for (std::uint64_t cm = 0; cm < (1ull << n); ++cm) {
        if (std::popcount(cm) != c_size || (cm & (am | bm))) continue;
        Split sp;
        sp.A = VertexSet(am).to_vector();
        sp.B = VertexSet(bm).to_vector();
        sp.C = VertexSet(cm).to_vector();
        sp.D = VertexSet(~(am | bm | cm) & VertexSet::full(n).bits).to_vector();
        if (fn(sp)) return true;
      }
    }
  }
  return false;
}

bool brute_is_member(const Graph& g, int k) {
  auto circ = circumference(g);
  if (circ && circ->first >= k) return false;
  int l = ell(k);
  bool odd = k % 2 == 1;
  for (int r = 1; r <= l; ++r) {
    int c_size = l - r + 1;
    auto with_ham = [&](const Split& sp, auto member) {
      if (!member(g, sp, k, r)) return false;
      return hamilton_path_between_sets(g, VertexSet(mask_of(sp.A)), VertexSet(mask_of(sp.B)));
    };
    if (odd) {
      if (r <= l - 1 &&
          any_split(g, r, r, c_size,
                    [&](const Split& sp) { return with_ham(sp, member_type1); }))
        return true;
    } else {
      if (r <= l - 1) {
        for (int a_size : {r, r + 1})
          if (any_split(g, a_size, r, c_size,
                        [&](const Split& sp) { return with_ham(sp, member_type2); }))
            return true;
        if (any_split(g, r, r, c_size,
                      [&](const Split& sp) { return with_ham(sp, member_type3); }))
          return true;
      }
      if (r == l) {
        int cyc = g.n - 2 * (l - 1);
        if (cyc >= 3 && any_split(g, l - 1, l - 1, cyc, [&](const Split& sp) {
              return with_ham(sp, member_type4);
            }))
          return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("generator and partition oracle agree on the family, k in {5,6,7,8}") {
  for (int k : {5, 6, 7, 8}) {
    int l = ell(k);
    for (int m = k; m <= k + 1; ++m) {
      std::set<std::string> generated;
      for (int r = 1; r <= l; ++r)
        for (const auto& mem : enumerate_family(m, k, r))
          generated.insert(canonical_form(mem.graph));
      std::set<std::string> brute;
      for (const Graph& g : enumerate_connected(m))
        if (brute_is_member(g, k)) brute.insert(canonical_form(g));
      CHECK(generated == brute);
      if (generated != brute) {
        for (const auto& f : brute)
          if (!generated.count(f)) MESSAGE("missing from generator: k=", k, " m=", m, " ", f);
        for (const auto& f : generated)
          if (!brute.count(f)) MESSAGE("extra in generator: k=", k, " m=", m, " ", f);
      }
    }
  }
}
