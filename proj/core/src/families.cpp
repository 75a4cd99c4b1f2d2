#include "egstab/families.hpp"

#include <algorithm>
#include <sstream>

#include "egstab/algorithms.hpp"
#include "egstab/canonical.hpp"
#include "egstab/formulas.hpp"

namespace egstab {

Graph build_h(const HParams& p) {
  if (!(p.n >= p.k && p.k >= 2 * p.a && p.a >= 1)) throw OutOfDomain("H(n,k,a) needs n >= k >= 2a >= 2");
  if (p.n > kMaxVertices) throw CapacityExceeded("H construction exceeds 64 vertices");
  int b = p.n - p.k + p.a;
  Graph g(p.n);
  // order: A = [0,a), B = [a,a+b), C = [a+b,n); A meets everything,
  // C is a clique, B stays independent
  for (int i = 0; i < p.a; ++i)
    for (int j = i + 1; j < p.n; ++j) g.add_edge(i, j);
  for (int i = p.a + b; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j) g.add_edge(i, j);
  return g;
}

Graph build_z(int n, int k, int delta) {
  if (delta < 2 || k - delta < delta + 1) throw OutOfDomain("Z(n,k,delta) needs delta >= 2 and k-delta >= delta+1");
  if (n < k - delta) throw InvalidInput("Z(n,k,delta) needs n >= k-delta");
  if ((n - k + delta) % (delta - 1) != 0) throw InvalidInput("Z(n,k,delta) needs (n-k+delta) divisible by delta-1");
  int t = (n - k + delta) / (delta - 1);
  if (n > kMaxVertices) throw CapacityExceeded("Z construction exceeds 64 vertices");
  Graph g(n);
  // shared pair {0,1}; K_{k-delta} on [0, k-delta); then t blocks of delta-1
  for (int i = 0; i < k - delta; ++i)
    for (int j = i + 1; j < k - delta; ++j) g.add_edge(i, j);
  int base = k - delta;
  for (int block = 0; block < t; ++block) {
    std::vector<int> verts{0, 1};
    for (int i = 0; i < delta - 1; ++i) verts.push_back(base + block * (delta - 1) + i);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) g.add_edge(verts[i], verts[j]);
  }
  return g;
}

Graph build_f_ell(int l) {
  if (l < 2) throw OutOfDomain("F(l) needs l >= 2");
  int n = 2 * l + 2;
  if (n > kMaxVertices) throw CapacityExceeded("F(l) exceeds 64 vertices");
  Graph g(n);
  for (int i = 0; i + 1 < 2 * l - 1; ++i) g.add_edge(i, i + 1);  // path on 2l-1 vertices
  for (int j = 2 * l - 1; j < n; ++j)                            // three independent vertices
    for (int i = 0; i < 2 * l - 1; i += 2) g.add_edge(j, i);     // joined to the larger side
  return g;
}

Graph build_e(int m) {
  if (m < 1 || m > kMaxVertices) throw InvalidInput("E_m needs 1 <= m <= 64");
  Graph g(m);
  for (int i = 0; i + 1 < m; i += 2) g.add_edge(i, i + 1);
  return g;
}

Graph build_gnk3(int n, int k) {
  if (k < 10 || k % 2 != 0) throw OutOfDomain("G(n,k,3) needs even k >= 10");
  if (n < k + 1) throw OutOfDomain("G(n,k,3) needs n >= k+1");
  if (n > kMaxVertices) throw CapacityExceeded("G(n,k,3) exceeds 64 vertices");
  int l = ell(k);
  int a = l - 2;
  Graph g(n);
  // order: A = [0,a), B = [a,2a), C = triangle [2a,2a+3), D blocks after
  int cbase = 2 * a;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) {
      g.add_edge(i, j);
      g.add_edge(a + i, a + j);
    }
  for (int ci = 0; ci < 3; ++ci) {
    for (int cj = ci + 1; cj < 3; ++cj) g.add_edge(cbase + ci, cbase + cj);
    for (int i = 0; i < a; ++i) {
      g.add_edge(cbase + ci, i);
      g.add_edge(cbase + ci, a + i);
    }
  }
  int dbase = cbase + 3;
  int dcount = n - dbase;  // = n-k+3
  for (int d = 0; d < dcount; ++d) {
    for (int ci = 0; ci < 3; ++ci) g.add_edge(dbase + d, cbase + ci);
    if (d % 2 == 1) g.add_edge(dbase + d - 1, dbase + d);  // edge blocks, parity vertex left single
  }
  return g;
}

std::string to_string(FamilyType t) {
  switch (t) {
    case FamilyType::I: return "I";
    case FamilyType::II: return "II";
    case FamilyType::III: return "III";
    default: return "IV";
  }
}

std::string to_string(SpecialTag t) {
  switch (t) {
    case SpecialTag::F0: return "F0";
    case SpecialTag::F1: return "F1";
    case SpecialTag::F2: return "F2";
    case SpecialTag::F3: return "F3";
    case SpecialTag::F4: return "F4";
    default: return "F5";
  }
}

std::string FamilyDescriptor::summary() const {
  std::ostringstream out;
  out << "type=" << to_string(type) << "\nm=" << m << "\nk=" << k << "\nr=" << r << "\n";
  auto list = [&](const char* name, const std::vector<int>& v) {
    out << name << "=";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "\n";
  };
  list("A", A);
  list("B", B);
  list("C", C);
  list("D", D);
  for (std::size_t p = 0; p < cd_paths.size(); ++p) {
    out << "cd_path" << p << "=";
    for (std::size_t i = 0; i < cd_paths[p].size(); ++i) out << (i ? "," : "") << cd_paths[p][i];
    out << "\n";
  }
  for (auto [u, v] : a_non_edges) out << "a_non_edge=" << u << "," << v << "\n";
  for (const auto& [name, v] : marks) out << "mark_" << name << "=" << v << "\n";
  if (special) out << "special=" << to_string(*special) << "\n";
  return out.str();
}

namespace {

// Rebuild the graph a descriptor denotes; the one source of truth shared by
// the generators and validate_member's edge audit.
Graph realize(const FamilyDescriptor& d) {
  Graph g(d.m);
  auto add_clique = [&](const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) g.add_edge(verts[i], verts[j]);
  };
  auto join = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
    for (int x : xs)
      for (int y : ys) g.add_edge(x, y);
  };
  if (d.type == FamilyType::IV) {
    add_clique(d.A);
    add_clique(d.B);
    const auto& cyc = d.cd_paths.at(0);
    for (std::size_t i = 0; i < cyc.size(); ++i) g.add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    join({d.marks.at("w1")}, d.A);
    join({d.marks.at("w2")}, d.B);
    join({d.marks.at("w")}, d.A);
    join({d.marks.at("w")}, d.B);
    return g;
  }
  add_clique(d.B);
  join(d.B, d.C);
  if (static_cast<int>(d.A.size()) == d.r) {
    add_clique(d.A);
    join(d.A, d.C);
  } else {
    // |A| = r+1: complete A∪C on the A side minus the declared misses
    std::vector<std::pair<int, int>> missing = d.a_non_edges;
    auto miss = [&](int u, int v) {
      for (auto [a, b] : missing)
        if ((a == u && b == v) || (a == v && b == u)) return true;
      return false;
    };
    for (std::size_t i = 0; i < d.A.size(); ++i) {
      for (std::size_t j = i + 1; j < d.A.size(); ++j)
        if (!miss(d.A[i], d.A[j])) g.add_edge(d.A[i], d.A[j]);
      for (int c : d.C)
        if (!miss(d.A[i], c)) g.add_edge(d.A[i], c);
    }
  }
  if (d.type == FamilyType::I || d.type == FamilyType::III) join(d.A, d.C);
  for (const auto& path : d.cd_paths)
    for (std::size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);
  if (d.type == FamilyType::III) {
    if (d.marks.count("x")) {
      g.add_edge(d.marks.at("x"), d.marks.at("x1"));
      g.add_edge(d.marks.at("x"), d.marks.at("x2"));
    }
    if (d.marks.count("y")) g.add_edge(d.marks.at("y"), d.marks.at("y1"));
    if (d.marks.count("z")) {
      g.add_edge(d.marks.at("z"), d.marks.at("z1"));
      g.add_edge(d.marks.at("z'"), d.marks.at("z1'"));
    }
  }
  return g;
}

// Pattern strings use 'C'/'D'; vertices are numbered A, B, then C and D by
// first appearance along the pattern(s).
struct PatternLayout {
  std::vector<std::string> paths;
};

FamilyDescriptor make_descriptor(FamilyType type, int m, int k, int r, int a_size, int b_size,
                                 const PatternLayout& layout) {
  FamilyDescriptor d;
  d.type = type;
  d.m = m;
  d.k = k;
  d.r = r;
  for (int i = 0; i < a_size; ++i) d.A.push_back(i);
  for (int i = 0; i < b_size; ++i) d.B.push_back(a_size + i);
  int c_total = 0, d_total = 0;
  for (const auto& p : layout.paths)
    for (char s : p) (s == 'C' ? c_total : d_total)++;
  int c_next = a_size + b_size;
  int d_next = a_size + b_size + c_total;
  for (const auto& p : layout.paths) {
    std::vector<int> path;
    for (char s : p) path.push_back(s == 'C' ? c_next++ : d_next++);
    d.cd_paths.push_back(std::move(path));
  }
  for (int v = a_size + b_size; v < a_size + b_size + c_total; ++v) d.C.push_back(v);
  for (int v = a_size + b_size + c_total; v < m; ++v) d.D.push_back(v);
  if (a_size + b_size + c_total + d_total != m)
    throw std::logic_error("family layout does not have m vertices");
  return d;
}

// Assignments of exactly one missing A∪C partner per A vertex: a perfect
// pairing on part of A plus a C target for the rest.
void gen_miss_structures(int a_size, int c_size, std::vector<int>& assign,
                         std::vector<std::vector<int>>& out) {
  int first = -1;
  for (int i = 0; i < a_size; ++i)
    if (assign[i] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(assign);
    return;
  }
  for (int j = first + 1; j < a_size; ++j) {
    if (assign[j] >= 0) continue;
    assign[first] = j;
    assign[j] = first;
    gen_miss_structures(a_size, c_size, assign, out);
    assign[first] = assign[j] = -1;
  }
  for (int c = 0; c < c_size; ++c) {
    assign[first] = a_size + c;
    gen_miss_structures(a_size, c_size, assign, out);
    assign[first] = -1;
  }
}

void apply_miss(FamilyDescriptor& d, const std::vector<int>& assign) {
  int a_size = static_cast<int>(d.A.size());
  for (int i = 0; i < a_size; ++i) {
    int t = assign[i];
    if (t < a_size) {
      if (t > i) d.a_non_edges.emplace_back(d.A[i], d.A[t]);
    } else {
      d.a_non_edges.emplace_back(d.A[i], d.C[t - a_size]);
    }
  }
}

bool is_star_assign(const std::vector<int>& assign) {
  // |A| = 3 with one mutual pair and the remaining vertex missing a C vertex
  if (assign.size() != 3) return false;
  int pairs = 0, singles = 0;
  for (int i = 0; i < 3; ++i) (assign[i] < 3 ? pairs : singles)++;
  return pairs == 2 && singles == 1;
}

int star_center(const FamilyDescriptor& d, const std::vector<int>& assign) {
  for (std::size_t i = 0; i < assign.size(); ++i)
    if (assign[i] >= static_cast<int>(assign.size())) return d.A[i];
  return -1;
}

std::string repeat_cd(int c_count, const std::vector<int>& gap_sizes) {
  // C (D^gap) C (D^gap) ... C
  std::string p = "C";
  for (int g = 0; g < c_count - 1; ++g) {
    p += std::string(gap_sizes[g], 'D');
    p += 'C';
  }
  return p;
}

void add_candidate(std::vector<FamilyMember>& out, FamilyDescriptor d) {
  Graph g = realize(d);
  out.push_back(FamilyMember{std::move(d), std::move(g)});
}

void generate_type1(int m, int k, int r, std::vector<FamilyMember>& out) {
  int l = ell(k);
  int c_size = l - r + 1;
  if (c_size >= 3) {
    if (m != k) return;
    PatternLayout layout{{repeat_cd(c_size, std::vector<int>(c_size - 1, 1))}};
    add_candidate(out, make_descriptor(FamilyType::I, m, k, r, r, r, layout));
  } else {
    int d_size = m - 2 * l;
    if (d_size < 1) return;
    PatternLayout layout{{repeat_cd(2, {d_size})}};
    add_candidate(out, make_descriptor(FamilyType::I, m, k, r, r, r, layout));
  }
}

void generate_type2(int m, int k, int r, std::vector<FamilyMember>& out) {
  int l = ell(k);
  int c_size = l - r + 1;
  if (c_size >= 3) {
    if (m == k) {
      // |A| = r, one D-edge: one gap of two
      for (int gd = 0; gd < c_size - 1; ++gd) {
        std::vector<int> gaps(c_size - 1, 1);
        gaps[gd] = 2;
        auto d = make_descriptor(FamilyType::II, m, k, r, r, r, {{repeat_cd(c_size, gaps)}});
        if (r == l - 2) {
          d.special = SpecialTag::F0;
          // v: the D vertex in a single gap, with its two C path neighbors
          const auto& path = d.cd_paths[0];
          for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            bool is_d = std::find(d.D.begin(), d.D.end(), path[i]) != d.D.end();
            bool c_before = std::find(d.C.begin(), d.C.end(), path[i - 1]) != d.C.end();
            bool c_after = std::find(d.C.begin(), d.C.end(), path[i + 1]) != d.C.end();
            if (is_d && c_before && c_after) {
              d.marks["v"] = path[i];
              d.marks["v1"] = path[i - 1];
              d.marks["v2"] = path[i + 1];
              break;
            }
          }
        }
        add_candidate(out, std::move(d));
      }
      // |A| = r+1, edgeless D: alternating pattern plus a miss structure
      std::vector<std::vector<int>> structures;
      std::vector<int> assign(r + 1, -1);
      gen_miss_structures(r + 1, c_size, assign, structures);
      for (const auto& st : structures) {
        auto d = make_descriptor(FamilyType::II, m, k, r, r + 1, r,
                                 {{repeat_cd(c_size, std::vector<int>(c_size - 1, 1))}});
        apply_miss(d, st);
        if (r == 2 && is_star_assign(st)) {
          d.special = SpecialTag::F5;
          d.marks["u1"] = star_center(d, st);
        }
        add_candidate(out, std::move(d));
      }
    }
    if (m == k + 1 && r == l - 2) {
      // two independent D-edges: both gaps doubled (F4)
      auto d = make_descriptor(FamilyType::II, m, k, r, r, r, {{repeat_cd(3, {2, 2})}});
      d.special = SpecialTag::F4;
      add_candidate(out, std::move(d));
    }
  } else {
    // |C| = 2, r = l-1: the D vertices form one run between the two C's
    int d_full = m - 2 * l;
    if (d_full >= 2) {
      add_candidate(out, make_descriptor(FamilyType::II, m, k, r, r, r,
                                         {{repeat_cd(2, {d_full})}}));
    }
    int d_small = m - 2 * l - 1;
    if (d_small >= 1) {
      std::vector<std::vector<int>> structures;
      std::vector<int> assign(r + 1, -1);
      gen_miss_structures(r + 1, 2, assign, structures);
      for (const auto& st : structures) {
        auto d = make_descriptor(FamilyType::II, m, k, r, r + 1, r, {{repeat_cd(2, {d_small})}});
        apply_miss(d, st);
        if (r == 2 && is_star_assign(st)) {
          d.special = SpecialTag::F5;
          d.marks["u1"] = star_center(d, st);
        }
        add_candidate(out, std::move(d));
      }
    }
  }
}

void generate_type3(int m, int k, int r, std::vector<FamilyMember>& out) {
  int l = ell(k);
  int c_size = l - r + 1;
  auto mark_f1 = [&](FamilyDescriptor& d) {
    d.special = SpecialTag::F1;
    d.marks["x"] = d.cd_paths[1][0];
    d.marks["x1"] = d.A[0];
    d.marks["x2"] = d.A[1];
  };
  auto mark_f2 = [&](FamilyDescriptor& d) {
    d.special = SpecialTag::F2;
    d.marks["y"] = d.cd_paths[0][0];
    d.marks["y1"] = d.A[0];
    d.marks["y2"] = d.cd_paths[0][1];
  };
  if (c_size >= 3) {
    if (m != k) return;
    if (r >= 2) {  // F1: alternating C-path plus an isolated D vertex on two A's
      auto d = make_descriptor(FamilyType::III, m, k, r, r, r,
                               {{repeat_cd(c_size, std::vector<int>(c_size - 1, 1)), "D"}});
      mark_f1(d);
      add_candidate(out, std::move(d));
    }
    {  // F2: path with a D end-vertex hooked to one A vertex
      std::string p;
      for (int i = 0; i < c_size; ++i) p += "DC";
      auto d = make_descriptor(FamilyType::III, m, k, r, r, r, {{p}});
      mark_f2(d);
      add_candidate(out, std::move(d));
    }
    if (r >= 2) {  // F3 layouts: D-ended path with p D's plus a C-ended path
      for (int p = 2; p <= c_size; ++p) {
        int q = c_size + 1 - p;
        std::string p1 = "D";
        for (int i = 1; i < p; ++i) p1 += "CD";
        std::string p2 = "C";
        for (int i = 1; i < q; ++i) p2 += "DC";
        auto d = make_descriptor(FamilyType::III, m, k, r, r, r, {{p1, p2}});
        d.special = SpecialTag::F3;
        d.marks["z"] = d.cd_paths[0].front();
        d.marks["z'"] = d.cd_paths[0].back();
        d.marks["z1"] = d.A[0];
        d.marks["z1'"] = d.A[1];
        d.marks["z2"] = d.cd_paths[0][1];
        d.marks["z2'"] = d.cd_paths[0][d.cd_paths[0].size() - 2];
        add_candidate(out, std::move(d));
      }
    }
  } else {
    int d_run = m - 2 * l - 1;  // D vertices on the C..C path, one more D aside
    if (r >= 2 && d_run >= 1) {
      auto d = make_descriptor(FamilyType::III, m, k, r, r, r, {{repeat_cd(2, {d_run}), "D"}});
      mark_f1(d);
      add_candidate(out, std::move(d));
    }
    if (d_run >= 1) {
      auto d = make_descriptor(FamilyType::III, m, k, r, r, r, {{"DC" + std::string(d_run, 'D') + "C"}});
      mark_f2(d);
      add_candidate(out, std::move(d));
    }
    if (r >= 2 && m == k) {  // F3 with |C| = 2: z-c-z' plus a trivial C path
      auto d = make_descriptor(FamilyType::III, m, k, r, r, r, {{"DCD", "C"}});
      d.special = SpecialTag::F3;
      d.marks["z"] = d.cd_paths[0].front();
      d.marks["z'"] = d.cd_paths[0].back();
      d.marks["z1"] = d.A[0];
      d.marks["z1'"] = d.A[1];
      d.marks["z2"] = d.cd_paths[0][1];
      d.marks["z2'"] = d.cd_paths[0][1];
      add_candidate(out, std::move(d));
    }
  }
}

void generate_type4(int m, int k, int r, std::vector<FamilyMember>& out) {
  int l = ell(k);
  int c_size = m - 2 * (l - 1);
  if (c_size < 5) return;
  for (int t = 3; t <= c_size - 2; ++t) {
    FamilyDescriptor d;
    d.type = FamilyType::IV;
    d.m = m;
    d.k = k;
    d.r = r;
    for (int i = 0; i < l - 1; ++i) d.A.push_back(i);
    for (int i = 0; i < l - 1; ++i) d.B.push_back(l - 1 + i);
    std::vector<int> cyc;
    for (int i = 0; i < c_size; ++i) {
      d.C.push_back(2 * (l - 1) + i);
      cyc.push_back(2 * (l - 1) + i);
    }
    d.cd_paths.push_back(cyc);
    d.marks["w1"] = cyc[0];
    d.marks["w2"] = cyc[1];
    d.marks["w"] = cyc[t];
    add_candidate(out, d);
  }
}

}  // namespace

std::vector<FamilyMember> enumerate_family(int m, int k, int r) {
  if (k < 5 || m < k) throw InvalidInput("family needs m >= k >= 5");
  int l = ell(k);
  if (r < 1 || r > l) throw InvalidInput("family needs 1 <= r <= ell");
  if (m > kMaxVertices) throw CapacityExceeded("family member exceeds 64 vertices");
  std::vector<FamilyMember> candidates;
  if (k % 2 == 1) {
    if (r <= l - 1) generate_type1(m, k, r, candidates);
  } else {
    if (r <= l - 1) {
      generate_type2(m, k, r, candidates);
      generate_type3(m, k, r, candidates);
    }
    if (r == l) generate_type4(m, k, r, candidates);
  }
  std::vector<FamilyMember> out;
  std::vector<std::string> seen;
  for (auto& cand : candidates) {
    if (!validate_member(cand.graph, cand.desc).ok) continue;
    std::string form = canonical_form(cand.graph);
    if (std::find(seen.begin(), seen.end(), form) != seen.end()) continue;
    seen.push_back(form);
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), [](const FamilyMember& a, const FamilyMember& b) {
    return canonical_form(a.graph) < canonical_form(b.graph);
  });
  return out;
}

FamilyMember build_special(SpecialTag tag, int m, int k, int r) {
  if (k < 5) throw InvalidInput("special members need k >= 5");
  int l = ell(k);
  if (k % 2 != 0) throw InvalidInput("special members need even k");
  auto pick = [&](auto&& want) -> FamilyMember {
    std::vector<FamilyMember> cands;
    if (tag == SpecialTag::F1 || tag == SpecialTag::F2 || tag == SpecialTag::F3)
      generate_type3(m, k, r, cands);
    else
      generate_type2(m, k, r, cands);
    std::vector<FamilyMember> hits;
    for (auto& c : cands)
      if (c.desc.special == tag && want(c) && validate_member(c.graph, c.desc).ok)
        hits.push_back(std::move(c));
    if (hits.empty()) throw InvalidInput("no such special member: tag/parameter mismatch");
    std::stable_sort(hits.begin(), hits.end(), [](const FamilyMember& a, const FamilyMember& b) {
      return canonical_form(a.graph) < canonical_form(b.graph);
    });
    return std::move(hits.front());
  };
  switch (tag) {
    case SpecialTag::F0:
      if (r != l - 2 || m != k) throw InvalidInput("F0 needs r = ell-2 and m = k");
      return pick([](const FamilyMember&) { return true; });
    case SpecialTag::F4:
      if (r != l - 2 || m != k + 1) throw InvalidInput("F4 needs r = ell-2 and m = k+1");
      return pick([](const FamilyMember&) { return true; });
    case SpecialTag::F1:
    case SpecialTag::F3:
      if (r < 2) throw InvalidInput("F1/F3 need r >= 2");
      [[fallthrough]];
    case SpecialTag::F2: {
      if (r < 1 || r > l - 1) throw InvalidInput("F1/F2/F3 need 1 <= r <= ell-1");
      if (tag == SpecialTag::F3)
        return pick([](const FamilyMember& c) {
          return c.desc.cd_paths[0].size() == 3;  // figure layout: z-c-z'
        });
      return pick([](const FamilyMember&) { return true; });
    }
    default:
      if (r != 2) throw InvalidInput("F5 needs r = 2");
      return pick([](const FamilyMember&) { return true; });
  }
}

void ValidationReport::add(const std::string& name, bool ok_, const std::string& detail) {
  checks.push_back({name, ok_, detail});
  ok = ok && ok_;
}

ValidationReport validate_member(const Graph& g, const FamilyDescriptor& d) {
  ValidationReport rep;
  rep.add("order", g.n == d.m);
  VertexSet all;
  std::size_t total = d.A.size() + d.B.size() + d.C.size() + d.D.size();
  for (int v : d.A) all.add(v);
  for (int v : d.B) all.add(v);
  for (int v : d.C) all.add(v);
  for (int v : d.D) all.add(v);
  bool partition_ok = g.n == d.m && total == static_cast<std::size_t>(d.m) &&
                      all == VertexSet::full(d.m);
  rep.add("partition", partition_ok);
  if (!partition_ok) return rep;

  int l = ell(d.k);
  auto is_clique = [&](const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
  };
  auto independent = [&](const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.has_edge(vs[i], vs[j])) return false;
    return true;
  };
  auto joined = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
    for (int x : xs)
      for (int y : ys)
        if (!g.has_edge(x, y)) return false;
    return true;
  };

  if (d.type == FamilyType::IV) {
    rep.add("a_clique", static_cast<int>(d.A.size()) == l - 1 && is_clique(d.A));
    rep.add("b_clique", static_cast<int>(d.B.size()) == l - 1 && is_clique(d.B));
    bool cycle_ok = d.cd_paths.size() == 1 && d.cd_paths[0].size() == d.C.size() &&
                    d.C.size() >= 3;
    if (cycle_ok) {
      const auto& cyc = d.cd_paths[0];
      auto [sub, map] = induced_subgraph(g, [&] {
        VertexSet s;
        for (int v : d.C) s.add(v);
        return s;
      }());
      int edges = sub.edge_count();
      cycle_ok = edges == static_cast<int>(d.C.size());
      for (std::size_t i = 0; i < cyc.size() && cycle_ok; ++i)
        cycle_ok = g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      int w = d.marks.count("w") ? d.marks.at("w") : -1;
      int w1 = d.marks.count("w1") ? d.marks.at("w1") : -1;
      int w2 = d.marks.count("w2") ? d.marks.at("w2") : -1;
      cycle_ok = cycle_ok && w >= 0 && w1 >= 0 && w2 >= 0 && g.has_edge(w1, w2) &&
                 !g.has_edge(w, w1) && !g.has_edge(w, w2);
    }
    rep.add("c_cycle", cycle_ok);
  } else {
    if (d.type == FamilyType::II) {
      bool deg_ok = true;
      VertexSet ac;
      for (int v : d.A) ac.add(v);
      for (int v : d.C) ac.add(v);
      for (int v : d.A) deg_ok = deg_ok && std::popcount(g.adj[v] & ac.bits) == l;
      rep.add("a_degree", deg_ok && (static_cast<int>(d.A.size()) == d.r ||
                                     static_cast<int>(d.A.size()) == d.r + 1));
      bool b_ok = static_cast<int>(d.B.size()) == d.r && is_clique(d.B) && joined(d.B, d.C);
      rep.add("b_side", b_ok);
    } else {
      rep.add("a_clique", static_cast<int>(d.A.size()) == d.r && is_clique(d.A));
      rep.add("b_clique", static_cast<int>(d.B.size()) == d.r && is_clique(d.B));
      rep.add("ab_c_join", joined(d.A, d.C) && joined(d.B, d.C));
    }
    rep.add("c_independent",
            independent(d.C) && static_cast<int>(d.C.size()) == l - d.r + 1);
    // F[D] edge shape
    int d_edges = 0;
    for (std::size_t i = 0; i < d.D.size(); ++i)
      for (std::size_t j = i + 1; j < d.D.size(); ++j) d_edges += g.has_edge(d.D[i], d.D[j]);
    if (d.C.size() >= 3) {
      if (d.type == FamilyType::I || d.type == FamilyType::III) {
        rep.add("d_shape", d_edges == 0);
      } else {
        int a_size = static_cast<int>(d.A.size());
        int want = a_size == d.r + 1 ? 0 : (d.m == d.k + 1 ? 2 : 1);
        rep.add("d_shape", d_edges == want);
      }
    } else {
      // |C| = 2: F[D] is a path (Types I, II) or a path plus one isolated
      // vertex (Type III)
      VertexSet dset;
      for (int v : d.D) dset.add(v);
      bool deg_ok = true;
      for (int v : d.D) deg_ok = deg_ok && std::popcount(g.adj[v] & dset.bits) <= 2;
      int comps = 0;
      VertexSet todo = dset;
      while (!todo.empty()) {
        ++comps;
        todo = todo & ~reach(g, todo.min(), todo);
      }
      int want_comps = d.type == FamilyType::III ? 2 : 1;
      rep.add("d_shape", deg_ok && comps == want_comps &&
                             d_edges == static_cast<int>(d.D.size()) - want_comps);
    }
  }

  // declared C∪D paths must be exactly the induced edges on C∪D
  if (d.type != FamilyType::IV) {
    VertexSet cd;
    for (int v : d.C) cd.add(v);
    for (int v : d.D) cd.add(v);
    int cd_edges = 0;
    for (int u : cd.to_vector())
      cd_edges += std::popcount(g.adj[u] & cd.bits);
    cd_edges /= 2;
    int declared = 0;
    bool path_edges_ok = true;
    VertexSet covered;
    for (const auto& path : d.cd_paths) {
      for (int v : path) covered.add(v);
      declared += static_cast<int>(path.size()) - 1;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        path_edges_ok = path_edges_ok && g.has_edge(path[i], path[i + 1]);
    }
    // F1's isolated D vertex is not on any declared path
    if (d.marks.count("x")) covered.add(d.marks.at("x"));
    rep.add("cd_paths", path_edges_ok && declared == cd_edges && covered == cd);
    bool ends_ok = true;
    if (d.type == FamilyType::I || d.type == FamilyType::II) {
      const auto& p = d.cd_paths.at(0);
      VertexSet cset;
      for (int v : d.C) cset.add(v);
      ends_ok = d.cd_paths.size() == 1 && cset.contains(p.front()) && cset.contains(p.back());
      if (d.type == FamilyType::II && static_cast<int>(d.A.size()) == d.r + 1) {
        VertexSet aset;
        for (int v : d.A) aset.add(v);
        ends_ok = ends_ok && (g.adj[p.front()] & aset.bits) != 0 &&
                  (g.adj[p.back()] & aset.bits) != 0;
      }
    }
    rep.add("cd_ends", ends_ok);
  }

  rep.add("edge_audit", g == realize(d));

  auto circ = circumference(g);
  rep.add("circumference_below_k", !circ || circ->first < d.k,
          circ ? std::to_string(circ->first) : "acyclic");
  VertexSet aset, bset;
  for (int v : d.A) aset.add(v);
  for (int v : d.B) bset.add(v);
  rep.add("hamilton_a_to_b", hamilton_path_between_sets(g, aset, bset));
  return rep;
}

std::vector<KFamilyMember> enumerate_k_family_members(const KFamilySpec& spec) {
  if (spec.k < 5) throw InvalidInput("K family needs k >= 5");
  int l = ell(spec.k);
  if (spec.alpha < 0 || spec.alpha > l - 2) throw InvalidInput("K family needs 0 <= alpha <= ell-2");
  int m_max = spec.m_max > 0 ? spec.m_max : spec.k + 1;
  if (m_max < spec.k) throw InvalidInput("K family needs m_max >= k");
  std::vector<KFamilyMember> out;
  if (spec.alpha == 0) return out;  // the empty family by definition

  bool even = spec.k % 2 == 0;
  std::vector<std::string> seen;
  auto add = [&](const Graph& g, const std::string& id) {
    std::string form = canonical_form(g);
    if (std::find(seen.begin(), seen.end(), form) != seen.end()) return;
    seen.push_back(form);
    out.push_back({g, id});
  };

  std::vector<int> rset;
  for (int r = 1; r <= spec.alpha; ++r) rset.push_back(r);
  rset.push_back(l - 1);
  if (even) rset.push_back(l);
  for (int m = spec.k; m <= m_max; ++m)
    for (int r : rset) {
      if (r < 1 || r > l) continue;
      auto members = enumerate_family(m, spec.k, r);
      for (std::size_t i = 0; i < members.size(); ++i)
        add(members[i].graph, "F(" + std::to_string(m) + "," + std::to_string(spec.k) + "," +
                                  std::to_string(r) + ")#" + std::to_string(i));
    }
  if (even && spec.k >= 10 && l - spec.alpha <= 3) {
    add(build_special(SpecialTag::F0, spec.k, spec.k, l - 2).graph, "F0");
    add(build_special(SpecialTag::F4, spec.k + 1, spec.k, l - 2).graph, "F4");
  }
  if (even && spec.alpha + 1 <= l - 2)
    add(build_special(SpecialTag::F2, spec.k, spec.k, spec.alpha + 1).graph, "F2");
  if (even && spec.alpha == 1) {
    for (int m = spec.k; m <= m_max; ++m) {
      try {
        add(build_special(SpecialTag::F5, m, spec.k, 2).graph, "F5(m=" + std::to_string(m) + ")");
      } catch (const InvalidInput&) {
      }
    }
  }
  if (even) add(build_f_ell(l), "F(ell)");

  std::stable_sort(out.begin(), out.end(), [](const KFamilyMember& a, const KFamilyMember& b) {
    if (a.graph.n != b.graph.n) return a.graph.n < b.graph.n;
    return canonical_form(a.graph) < canonical_form(b.graph);
  });
  return out;
}

std::vector<Graph> enumerate_k_family(const KFamilySpec& spec) {
  std::vector<Graph> out;
  for (auto& m : enumerate_k_family_members(spec)) out.push_back(std::move(m.graph));
  return out;
}

std::optional<std::pair<std::string, std::vector<int>>> find_k_family_member(
    const Graph& g, const KFamilySpec& spec) {
  auto members = enumerate_k_family_members(spec);
  for (const auto& mem : members) {
    if (mem.graph.n > g.n) continue;
    if (auto emb = contains_subgraph(g, mem.graph)) return std::make_pair(mem.id, *emb);
  }
  return std::nullopt;
}

}  // namespace egstab
