#include "egstab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include "egstab/algorithms.hpp"
#include "egstab/canonical.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/families.hpp"
#include "egstab/formulas.hpp"
#include "egstab/graph6.hpp"

namespace egstab {

using nlohmann::json;

namespace {

constexpr const char* kNoteH10 =
    "h_2(n,10,3) evaluates to 3n exactly; the 3n-3 closed form sometimes quoted for this cell "
    "belongs to k=9 (h_2(n,9,3) = 3n-3).";

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct Tally {
  long long points = 0, passes = 0, failures = 0, skips = 0;
  std::vector<Counterexample> ces;

  void pass() { ++points, ++passes; }
  void skip() { ++points, ++skips; }
  void fail(Counterexample ce) {
    ++points, ++failures;
    ces.push_back(std::move(ce));
  }
  void merge(Tally&& o) {
    points += o.points;
    passes += o.passes;
    failures += o.failures;
    skips += o.skips;
    for (auto& ce : o.ces) ces.push_back(std::move(ce));
  }
};

// Deterministic fan-out: fixed chunking by index, merged in chunk order, so
// any jobs count produces the same report.
template <class Local, class Body, class Merge>
void parallel_over(long long total, int jobs, const Body& body, const Merge& merge) {
  jobs = std::max(1, jobs);
  if (total <= 0) return;
  long long chunk = (total + jobs - 1) / jobs;
  std::vector<Local> locals(jobs);
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] {
      long long lo = t * chunk, hi = std::min<long long>(total, (t + 1) * chunk);
      for (long long i = lo; i < hi; ++i) body(locals[t], i);
    });
  for (auto& th : threads) th.join();
  for (auto& l : locals) merge(std::move(l));
}

json base_config(const std::string& suite, const VerifyOptions& opt) {
  return json{{"suite", suite}, {"jobs", opt.jobs}, {"deep", opt.deep}, {"seed", opt.seed}};
}

void finish(CheckReport& r, Tally&& tally, const Timer& timer) {
  r.points = tally.points;
  r.passes = tally.passes;
  r.failures = tally.failures;
  r.skips = tally.skips;
  r.counterexamples = std::move(tally.ces);
  std::stable_sort(r.counterexamples.begin(), r.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) {
                     if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
                     return a.params.dump() < b.params.dump();
                   });
  r.wall_ms = timer.ms();
}

int suite_scale(int n_max, const VerifyOptions& opt) {
  return opt.deep ? std::min(n_max + 1, 10) : n_max;
}

int max_bit(std::uint64_t lengths) {
  return lengths ? 63 - std::countl_zero(lengths) : 0;
}

bool any_length_at_least(std::uint64_t lengths, int want) { return max_bit(lengths) >= want; }

// small deterministic rng for the sampled host constructions (seed recorded)
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 1) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % n); }
};

}  // namespace

json report_to_json(const CheckReport& r) {
  json ces = json::array();
  for (const auto& ce : r.counterexamples)
    ces.push_back(json{{"suite", ce.suite},
                       {"graph6", ce.graph6},
                       {"params", ce.params},
                       {"observed", ce.observed},
                       {"expected", ce.expected},
                       {"claim", ce.claim}});
  return json{{"suite", r.suite},
              {"grid", r.grid},
              {"config", r.config},
              {"counts",
               {{"graphs_examined", r.graphs_examined},
                {"points", r.points},
                {"passes", r.passes},
                {"failures", r.failures},
                {"skips", r.skips}}},
              {"counterexamples", ces},
              {"paper_notes", r.paper_notes},
              {"observations", r.observations},
              {"timing", {{"wall_ms", r.wall_ms}}}};
}

std::string report_to_json_string(const CheckReport& r) { return report_to_json(r).dump(2) + "\n"; }

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.suite = j.at("suite").get<std::string>();
  r.grid = j.value("grid", json::object());
  r.config = j.value("config", json::object());
  const auto& c = j.at("counts");
  r.graphs_examined = c.at("graphs_examined").get<long long>();
  r.points = c.at("points").get<long long>();
  r.passes = c.at("passes").get<long long>();
  r.failures = c.at("failures").get<long long>();
  r.skips = c.at("skips").get<long long>();
  for (const auto& ce : j.value("counterexamples", json::array()))
    r.counterexamples.push_back({ce.at("suite").get<std::string>(),
                                 ce.at("graph6").get<std::string>(), ce.at("params"),
                                 ce.at("observed").get<std::string>(),
                                 ce.at("expected").get<std::string>(),
                                 ce.at("claim").get<std::string>()});
  for (const auto& n : j.value("paper_notes", json::array()))
    r.paper_notes.push_back(n.get<std::string>());
  r.observations = j.value("observations", json::object());
  if (j.contains("timing")) r.wall_ms = j["timing"].value("wall_ms", 0.0);
  return r;
}

void write_report_atomic(const CheckReport& r, const std::string& path) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot write report: " + path);
    out << report_to_json_string(r);
  }
  fs::rename(tmp, target);
}

bool asserting_suite(const std::string& suite_id) {
  static const std::set<std::string> asserting{"erdos_gallai", "kopylov_luo",   "main_lemma",
                                               "theorem_main", "prop_paths",    "lemma_counts",
                                               "fan",          "corollary_structures"};
  return asserting.count(suite_id) > 0;
}

// ---------------------------------------------------------------------------
// erdos_gallai: a connected graph with c(G) < k has at most (k-1)(n-1)/2 edges
// ---------------------------------------------------------------------------

CheckReport check_erdos_gallai(int n_max, const std::vector<int>& ks, const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "erdos_gallai";
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"k", ks}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["k"] = ks;
  if (std::find(ks.begin(), ks.end(), 10) != ks.end()) r.paper_notes.push_back(kNoteH10);

  struct Local {
    Tally tally;
    long long equality = 0;
  };
  Tally tally;
  long long equality = 0;
  for (int n = 1; n <= top; ++n) {
    const auto& keys = enumerate_connected_keys(n);
    r.graphs_examined += static_cast<long long>(keys.size());
    parallel_over<Local>(
        static_cast<long long>(keys.size()), opt.jobs,
        [&](Local& local, long long i) {
          Graph g = graph_from_key(keys[i]);
          auto circ = circumference(g);
          int c = circ ? circ->first : 0;
          long long e2 = 2LL * g.edge_count();
          for (int k : ks) {
            if (k < 2 || c >= k) {
              local.tally.skip();
              continue;
            }
            long long bound2 = static_cast<long long>(k - 1) * (n - 1);
            if (e2 <= bound2) {
              local.tally.pass();
              if (e2 == bound2) ++local.equality;
            } else {
              local.tally.fail({r.suite, graph6_encode(g), json{{"n", n}, {"k", k}},
                                std::to_string(g.edge_count()),
                                "<= " + std::to_string(bound2) + "/2 edges",
                                "edge bound for circumference below k"});
            }
          }
        },
        [&](Local&& local) {
          tally.merge(std::move(local.tally));
          equality += local.equality;
        });
  }
  r.observations["equality_attained"] = equality;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// kopylov_luo: 2-connected, c(G) < k implies N_s <= max{h_s(n,k,2), h_s(n,k,l)}
// ---------------------------------------------------------------------------

CheckReport check_kopylov_luo(int n_max, const std::vector<int>& ss, const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "kopylov_luo";
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"k", "5..n"}, {"s", ss}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["s"] = ss;
  if (top >= 10) r.paper_notes.push_back(kNoteH10);

  struct Local {
    Tally tally;
    long long equality = 0;
  };
  Tally tally;
  long long equality = 0;
  for (int n = 3; n <= top; ++n) {
    const auto& keys = enumerate_two_connected_keys(n);
    r.graphs_examined += static_cast<long long>(keys.size());
    parallel_over<Local>(
        static_cast<long long>(keys.size()), opt.jobs,
        [&](Local& local, long long i) {
          Graph g = graph_from_key(keys[i]);
          auto circ = circumference(g);
          int c = circ ? circ->first : 0;
          auto profile = clique_profile(g);
          for (int k = 5; k <= n; ++k) {
            for (int s : ss) {
              if (c >= k) {
                local.tally.skip();
                continue;
              }
              long long ns = s < static_cast<int>(profile.size()) ? profile[s] : 0;
              long long bound = bound_pair_max(n, k, 2, ell(k), s);
              if (ns <= bound) {
                local.tally.pass();
                if (ns == bound) ++local.equality;
              } else {
                local.tally.fail({r.suite, graph6_encode(g), json{{"n", n}, {"k", k}, {"s", s}},
                                  std::to_string(ns), "<= " + std::to_string(bound),
                                  "clique bound for 2-connected, circumference below k"});
              }
            }
          }
        },
        [&](Local&& local) {
          tally.merge(std::move(local.tally));
          equality += local.equality;
        });
  }
  r.observations["equality_attained"] = equality;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// main_lemma: 2-connected, c(G)<k, nonempty (l-1)-disintegration H and a
// longest H-path on m >= k vertices force a subgraph in F(m,k,r), r <= l.
// Minimal crossing pairs of that path must fit m-k < j-i-1 <= m-2l.
// ---------------------------------------------------------------------------

CheckReport check_main_lemma(int n_max, int k, const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "main_lemma";
  int l = ell(k);
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"k", k}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["k"] = k;
  if (k == 10) r.paper_notes.push_back(kNoteH10);

  std::map<int, std::vector<Graph>> members;  // longest-path order -> members
  for (int m = k; m <= top; ++m) {
    std::vector<Graph> mem;
    for (int rr = 1; rr <= l; ++rr)
      for (auto& fm : enumerate_family(m, k, rr)) mem.push_back(fm.graph);
    members[m] = std::move(mem);
  }

  struct Local {
    Tally tally;
    long long skip_circ = 0, skip_disint = 0, skip_short = 0, window_checks = 0;
  };
  Tally tally;
  long long skip_circ = 0, skip_disint = 0, skip_short = 0, window_checks = 0;
  for (int n = 3; n <= top; ++n) {
    const auto& keys = enumerate_two_connected_keys(n);
    r.graphs_examined += static_cast<long long>(keys.size());
    parallel_over<Local>(
        static_cast<long long>(keys.size()), opt.jobs,
        [&](Local& local, long long i) {
          Graph g = graph_from_key(keys[i]);
          auto circ = circumference(g);
          if (circ && circ->first >= k) {
            local.tally.skip();
            ++local.skip_circ;
            return;
          }
          VertexSet h = disintegration(g, l - 1);
          if (h.empty()) {
            local.tally.skip();
            ++local.skip_disint;
            return;
          }
          auto sp = longest_s_path(g, h);
          int m = sp ? sp->first : 0;
          if (m < k) {
            local.tally.skip();
            ++local.skip_short;
            return;
          }
          if (find_first_embedding(g, members.at(m)))
            local.tally.pass();
          else
            local.tally.fail({r.suite, graph6_encode(g), json{{"k", k}, {"m", m}, {"n", n}},
                              "no member embeds", "some F(m,k,r) with r <= ell embeds",
                              "structure forced by a long core path"});
          auto analysis = crossing_pairs(g, sp->second);
          for (const auto& cp : analysis.pairs) {
            if (!cp.minimal) continue;
            ++local.window_checks;
            int len = cp.j - cp.i - 1;
            if (len > m - k && len <= m - 2 * l)
              local.tally.pass();
            else
              local.tally.fail(
                  {r.suite, graph6_encode(g),
                   json{{"k", k}, {"m", m}, {"i", cp.i}, {"j", cp.j}}, std::to_string(len),
                   "in (" + std::to_string(m - k) + ", " + std::to_string(m - 2 * l) + "]",
                   "minimal crossing pair length window"});
          }
        },
        [&](Local&& local) {
          tally.merge(std::move(local.tally));
          skip_circ += local.skip_circ;
          skip_disint += local.skip_disint;
          skip_short += local.skip_short;
          window_checks += local.window_checks;
        });
  }
  r.observations["skips_by_reason"] = {{"circumference_at_least_k", skip_circ},
                                       {"empty_disintegration", skip_disint},
                                       {"core_path_below_k", skip_short}};
  r.observations["crossing_window_checks"] = window_checks;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// theorem_main
// ---------------------------------------------------------------------------

namespace {

struct TheoremMainState {
  int k, alpha, beta, s, l;
  std::vector<Graph> members;
};

// maximality and freeness beyond the cheap sieves
bool theorem_main_qualifies(const TheoremMainState& st, const Graph& g) {
  if (find_first_embedding(g, st.members)) return false;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      if (g.has_edge(a, b)) continue;
      Graph gab = with_edge(g, a, b);
      if (any_length_at_least(cycle_lengths_through_edge(gab, a, b), st.k)) continue;
      if (find_first_embedding(gab, st.members)) continue;
      return false;
    }
  return true;
}

bool theorem_main_conclusion(const TheoremMainState& st, const Graph& g) {
  if (clique_number(g) > st.k - st.beta) return true;
  return disintegration(g, st.l - 1).count() < st.k - st.l + st.alpha;
}

}  // namespace

CheckReport check_theorem_main(int n_max, int k, int alpha, int beta, int s,
                               const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "theorem_main";
  int l = ell(k);
  if (alpha < 0 || alpha > l - 2 || beta < 2 || l - alpha < beta)
    throw InvalidInput("theorem_main needs 0 <= alpha <= ell-2 and ell-alpha >= beta >= 2");
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"k", k}, {"alpha", alpha}, {"beta", beta}, {"s", s}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["k"] = k;
  r.config["alpha"] = alpha;
  r.config["beta"] = beta;
  r.config["s"] = s;
  if (k == 10) r.paper_notes.push_back(kNoteH10);

  TheoremMainState st{k, alpha, beta, s, l, enumerate_k_family({k, alpha, k + 1})};

  struct Local {
    Tally tally;
    long long qualifying = 0, sieved = 0;
  };
  Tally tally;
  long long qualifying = 0, sieved = 0;
  for (int n = 3; n <= top; ++n) {
    const auto& keys = enumerate_two_connected_keys(n);
    r.graphs_examined += static_cast<long long>(keys.size());
    parallel_over<Local>(
        static_cast<long long>(keys.size()), opt.jobs,
        [&](Local& local, long long i) {
          if (n < k) {  // the clique bound needs n >= k
            local.tally.skip();
            return;
          }
          Graph g = graph_from_key(keys[i]);
          auto circ = circumference(g);
          if (circ && circ->first >= k) {
            local.tally.skip();
            return;
          }
          if (count_cliques(g, s) <= bound_pair_max(n, k, l - alpha, beta, s)) {
            local.tally.skip();
            return;
          }
          ++local.sieved;
          if (!theorem_main_qualifies(st, g)) {
            local.tally.skip();
            return;
          }
          ++local.qualifying;
          if (theorem_main_conclusion(st, g))
            local.tally.pass();
          else
            local.tally.fail({r.suite, graph6_encode(g),
                              json{{"k", k}, {"alpha", alpha}, {"beta", beta}, {"s", s}, {"n", n}},
                              "omega <= k-beta and disintegration >= k-l+alpha",
                              "disjunction holds", "structure of maximal member-free graphs"});
        },
        [&](Local&& local) {
          tally.merge(std::move(local.tally));
          qualifying += local.qualifying;
          sieved += local.sieved;
        });
  }
  r.observations["graphs_past_clique_sieve"] = sieved;
  r.observations["qualifying_graphs"] = qualifying;
  r.observations["vacuous"] = qualifying == 0;
  r.observations["family_members"] = static_cast<long long>(st.members.size());
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// prop_paths
// ---------------------------------------------------------------------------

namespace {

int mark_of(const FamilyDescriptor& d, const char* key) {
  auto it = d.marks.find(key);
  return it == d.marks.end() ? -1 : it->second;
}

// the printed special list: edges promising a (k-2)-cycle
bool printed_special_edge(const FamilyDescriptor& d, int a, int b) {
  auto eq = [&](int p, int q) { return (a == p && b == q) || (a == q && b == p); };
  int x1 = mark_of(d, "x1"), x2 = mark_of(d, "x2");
  int z1 = mark_of(d, "z1"), z2 = mark_of(d, "z2");
  int z1p = mark_of(d, "z1'"), z2p = mark_of(d, "z2'");
  int v = mark_of(d, "v"), v1 = mark_of(d, "v1"), v2 = mark_of(d, "v2");
  int y1 = mark_of(d, "y1"), y2 = mark_of(d, "y2");
  int u1 = mark_of(d, "u1");
  std::set<int> C(d.C.begin(), d.C.end());
  if (x1 >= 0 && eq(x1, x2)) return true;
  if (z1 >= 0 && (eq(z1, z2) || eq(z1p, z2p))) return true;
  if (v >= 0 && (eq(v, v1) || eq(v, v2))) return true;
  if (y1 >= 0 && y2 >= 0 && eq(y1, y2)) return true;
  if (u1 >= 0 && ((a == u1 && C.count(b)) || (b == u1 && C.count(a)))) return true;
  if (y1 >= 0 && d.r >= 2 && ((a == y1 && C.count(b)) || (b == y1 && C.count(a)))) return true;
  return false;
}

// oracle-derived classification: every A neighbor of the junction C vertex
// next to a hooked path end caps at k-2, not only the marked one
bool is_special_edge(const FamilyDescriptor& d, int a, int b) {
  if (printed_special_edge(d, a, b)) return true;
  int y2 = mark_of(d, "y2"), z2 = mark_of(d, "z2"), z2p = mark_of(d, "z2'");
  std::set<int> A(d.A.begin(), d.A.end());
  if (y2 >= 0 && d.r >= 2 && ((A.count(a) && b == y2) || (A.count(b) && a == y2))) return true;
  if (z2 >= 0 && ((A.count(a) && (b == z2 || b == z2p)) || (A.count(b) && (a == z2 || a == z2p))))
    return true;
  return false;
}

// does some Hamilton path from u to v in g use the edge {a,b}?
bool hamilton_path_through_edge(const Graph& g, int u, int v, int a, int b) {
  std::vector<int> seq{u};
  std::uint64_t used = std::uint64_t(1) << u;
  bool found = false;
  auto rec = [&](auto&& self, int cur) -> void {
    if (found) return;
    if (static_cast<int>(seq.size()) == g.n) {
      if (cur != v) return;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int p = seq[i], q = seq[i + 1];
        if ((p == a && q == b) || (p == b && q == a)) {
          found = true;
          return;
        }
      }
      return;
    }
    for (std::uint64_t m = g.adj[cur] & ~used; m; m &= m - 1) {
      int w = std::countr_zero(m);
      seq.push_back(w);
      used |= std::uint64_t(1) << w;
      self(self, w);
      seq.pop_back();
      used &= ~(std::uint64_t(1) << w);
      if (found) return;
    }
  };
  rec(rec, u);
  return found;
}

}  // namespace

CheckReport check_prop_paths(const std::vector<int>& ks, int m_max, const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "prop_paths";
  r.grid = {{"k", ks}, {"m_max", m_max}};
  r.config = base_config(r.suite, opt);
  r.config["k"] = ks;
  r.config["m_max"] = m_max;
  if (std::find(ks.begin(), ks.end(), 10) != ks.end()) r.paper_notes.push_back(kNoteH10);

  Tally tally;
  json reclassified = json::array();
  long long members_checked = 0;
  long long p31_members = 0, p31_exceptions = 0;
  Rng rng(opt.seed);

  for (int k : ks) {
    int l = ell(k);
    int cap = m_max > 0 ? m_max : k + 1;
    for (int rr = 1; rr <= l - 2; ++rr) {
      for (int m = k; m <= cap; ++m) {
        for (const auto& mem : enumerate_family(m, k, rr)) {
          const Graph& F = mem.graph;
          const FamilyDescriptor& d = mem.desc;
          ++members_checked;
          std::string g6 = graph6_encode(F);
          std::set<int> A(d.A.begin(), d.A.end()), C(d.C.begin(), d.C.end());
          int x = mark_of(d, "x"), y = mark_of(d, "y"), u1 = mark_of(d, "u1"),
              y1 = mark_of(d, "y1");

          for (auto [a, b] : F.edges()) {
            bool special = is_special_edge(d, a, b);
            if (special != printed_special_edge(d, a, b))
              reclassified.push_back(json{{"graph6", g6}, {"a", a}, {"b", b}});
            auto lens = cycle_lengths_through_edge(F, a, b);
            int want = special ? k - 2 : k - 1;
            if (lens >> want & 1)
              tally.pass();
            else
              tally.fail({r.suite, g6,
                          json{{"k", k}, {"r", rr}, {"m", m}, {"a", a}, {"b", b},
                               {"kind", special ? "edge_k2" : "edge_k1"}},
                          "max " + std::to_string(max_bit(lens)),
                          "cycle on exactly " + std::to_string(want), "edge cycle promise"});
          }

          for (int a = 0; a < F.n; ++a)
            for (int b = a + 1; b < F.n; ++b) {
              if (F.has_edge(a, b)) continue;
              bool a_abd = !C.count(a), b_abd = !C.count(b);
              Graph fab = with_edge(F, a, b);
              auto lens = cycle_lengths_through_edge(fab, a, b);
              if (a_abd && b_abd) {
                bool special = (A.count(a) && A.count(b)) ||
                               (x >= 0 && ((a == x && A.count(b)) || (b == x && A.count(a)))) ||
                               (y >= 0 && ((a == y && A.count(b)) || (b == y && A.count(a)))) ||
                               (u1 >= 0 && (a == u1 || b == u1)) ||
                               (y1 >= 0 && d.r >= 2 && (a == y1 || b == y1));
                if (special) {
                  if (lens >> (k - 1) & 1)
                    tally.pass();
                  else
                    tally.fail({r.suite, g6,
                                json{{"k", k}, {"r", rr}, {"m", m}, {"a", a}, {"b", b},
                                     {"kind", "nonedge_k1"}},
                                "max " + std::to_string(max_bit(lens)),
                                "cycle on exactly " + std::to_string(k - 1),
                                "non-edge cycle promise"});
                } else if (any_length_at_least(lens, k)) {
                  tally.pass();
                } else {
                  tally.fail({r.suite, g6,
                              json{{"k", k}, {"r", rr}, {"m", m}, {"a", a}, {"b", b},
                                   {"kind", "nonedge_k"}},
                              "max " + std::to_string(max_bit(lens)),
                              "cycle on at least " + std::to_string(k), "non-edge cycle promise"});
                }
              } else if (a_abd != b_abd) {
                if (any_length_at_least(lens, k - 2))
                  tally.pass();
                else
                  tally.fail({r.suite, g6,
                              json{{"k", k}, {"r", rr}, {"m", m}, {"a", a}, {"b", b},
                                   {"kind", "nonedge_to_C_k2"}},
                              "max " + std::to_string(max_bit(lens)),
                              "cycle on at least " + std::to_string(k - 2),
                              "non-edge to C cycle promise"});
                bool a_c_pair = (A.count(a) && C.count(b)) || (A.count(b) && C.count(a));
                if (a_c_pair && a != u1 && b != u1) {
                  if (any_length_at_least(lens, k - 1))
                    tally.pass();
                  else
                    tally.fail({r.suite, g6,
                                json{{"k", k}, {"r", rr}, {"m", m}, {"a", a}, {"b", b},
                                     {"kind", "nonedge_AC_k1"}},
                                "max " + std::to_string(max_bit(lens)),
                                "cycle on at least " + std::to_string(k - 1),
                                "A-to-C non-edge cycle promise"});
                }
              }
            }

          // star-forest statement on sampled 2-connected hosts around F
          for (int extra = 1; extra <= 2; ++extra) {
            if (F.n + extra > kMaxVertices || F.n + extra > 20) break;
            Graph host = F;
            int base = host.n;
            host.n += extra;
            for (int t = 0; t < extra; ++t) host.adj.push_back(0);
            for (int t = 0; t < extra; ++t) {
              int c1 = d.C[rng.below(static_cast<int>(d.C.size()))];
              int c2 = d.C[rng.below(static_cast<int>(d.C.size()))];
              if (c1 == c2) c2 = d.C[c1 == d.C[0] ? 1 : 0];
              host.add_edge(base + t, c1);
              host.add_edge(base + t, c2);
            }
            auto circ = circumference(host);
            if (!is_two_connected(host) || (circ && circ->first >= k)) {
              tally.skip();
              continue;
            }
            VertexSet abc;
            for (int v : d.A) abc.add(v);
            for (int v : d.B) abc.add(v);
            for (int v : d.C) abc.add(v);
            if (is_star_forest(without_vertices(host, abc)))
              tally.pass();
            else
              tally.fail({r.suite, graph6_encode(host),
                          json{{"k", k}, {"r", rr}, {"m", m}, {"kind", "star_forest"}},
                          "not a star forest", "star forest",
                          "host minus A,B,C is a star forest"});
          }
        }
      }
    }

    // degree-(n-2) path statements on F[A∪C] of |A| = r+1 members
    int cap2 = m_max > 0 ? m_max : k + 1;
    for (int m = k; m <= cap2; ++m) {
      for (const auto& mem : enumerate_family(m, k, l - 1)) {
        const FamilyDescriptor& d = mem.desc;
        if (d.type != FamilyType::II || static_cast<int>(d.A.size()) != d.r + 1) continue;
        VertexSet ac;
        for (int v : d.A) ac.add(v);
        for (int v : d.C) ac.add(v);
        auto [sub, map] = induced_subgraph(mem.graph, ac);
        if (!is_connected(sub) || sub.n < 6) {
          tally.skip();
          continue;
        }
        int c1 = -1, c2 = -1;
        for (int v = 0; v < sub.n; ++v) {
          if (map[v] == d.C[0]) c1 = v;
          if (map[v] == d.C[1]) c2 = v;
        }
        bool hyp = c1 >= 0 && c2 >= 0 && !sub.has_edge(c1, c2);
        for (int v = 0; v < sub.n && hyp; ++v)
          if (v != c1 && v != c2) hyp = sub.degree(v) == sub.n - 2;
        if (!hyp) {
          tally.skip();
          continue;
        }
        ++p31_members;
        std::string g6 = graph6_encode(mem.graph);
        for (auto [a, b] : sub.edges()) {
          if (hamilton_path_through_edge(sub, c1, c2, a, b))
            tally.pass();
          else
            tally.fail({r.suite, g6,
                        json{{"k", k}, {"m", m}, {"a", a}, {"b", b}, {"kind", "p31_i"}},
                        "missing", "hamilton path c1..ab..c2",
                        "hamilton path through each edge"});
        }
        for (int v = 0; v < sub.n; ++v) {
          if (v == c1 || v == c2) continue;
          auto l1 = longest_path_between(sub, v, c1);
          auto l2 = longest_path_between(sub, v, c2);
          int best = std::max(l1 ? *l1 : 0, l2 ? *l2 : 0);
          if (best >= sub.n - 1)
            tally.pass();
          else
            tally.fail({r.suite, g6, json{{"k", k}, {"m", m}, {"v", v}, {"kind", "p31_ii"}},
                        std::to_string(best), ">= n-1 vertices",
                        "long path from each interior vertex"});
        }
        for (int a = 0; a < sub.n; ++a)
          for (int b = a + 1; b < sub.n; ++b) {
            if (sub.has_edge(a, b)) continue;
            if ((a == c1 && b == c2) || (a == c2 && b == c1)) continue;
            int dc1 = sub.degree(c1), dc2 = sub.degree(c2);
            if (std::min(dc1, dc2) == 1 && std::max(dc1, dc2) == sub.n - 3) {
              ++p31_exceptions;  // statement excludes this configuration
              tally.skip();
              continue;
            }
            if (hamilton_path_through_edge(with_edge(sub, a, b), c1, c2, a, b))
              tally.pass();
            else
              tally.fail({r.suite, g6,
                          json{{"k", k}, {"m", m}, {"a", a}, {"b", b}, {"kind", "p31_iii"}},
                          "missing", "spanning c1..ab..c2 path in F+ab",
                          "path through each added non-edge"});
          }
      }
    }
  }

  r.observations["members_checked"] = members_checked;
  r.observations["reclassified_edges"] = reclassified;
  if (!reclassified.empty())
    r.paper_notes.push_back(
        "edges from any A vertex to the junction C vertex beside a hooked path end (A x {y2}, "
        "A x {z2,z2'}) admit only (k-2)-cycles; the printed dichotomy lists just the marked "
        "vertex's edges. The harness asserts the oracle-derived classification; affected edges "
        "are in observations.reclassified_edges.");
  r.observations["p31_members"] = p31_members;
  r.observations["p31_iii_exception_instances"] = p31_exceptions;
  r.observations["p31_iii_exception_vacuous"] = p31_exceptions == 0;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// lemma_counts
// ---------------------------------------------------------------------------

CheckReport check_lemma_counts(const std::vector<int>& ks, int n_span, const std::vector<int>& ss,
                               const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "lemma_counts";
  r.grid = {{"k", ks}, {"n_span", n_span}, {"s", ss}};
  r.config = base_config(r.suite, opt);
  r.config["k"] = ks;
  r.config["n_span"] = n_span;
  r.config["s"] = ss;
  if (std::find(ks.begin(), ks.end(), 10) != ks.end()) r.paper_notes.push_back(kNoteH10);

  Tally tally;
  json g_chain_failures = json::array();
  long long g_chain_cells = 0, g_exact_cells = 0, g_exact_holds = 0;

  for (int k : ks) {
    int l = ell(k);
    for (int rr = 1; rr <= l - 2; ++rr)
      for (int s : ss) {
        if (s > l) continue;
        for (int t = l - rr + 1; t <= l; ++t)
          for (int n = k; n <= k + n_span; ++n) {
            if (f_s(n, k, rr, s) <= h_s(n, k, t, s))
              tally.pass();
            else
              tally.fail({r.suite, "", json{{"n", n}, {"k", k}, {"r", rr}, {"s", s}, {"t", t}},
                          std::to_string(f_s(n, k, rr, s)),
                          "<= " + std::to_string(h_s(n, k, t, s)),
                          "f_s below h_s for t >= ell-r+1"});
          }
      }

    if (k % 2 == 0 && k >= 10) {
      for (int s : ss) {
        if (s > l) continue;
        for (int t = 4; t <= l; ++t)
          for (int n = k; n <= k + n_span; ++n) {
            ++g_chain_cells;
            long long lhs = (n - k + 3) / 2 * (binom(5, s) - binom(3, s)) +
                            ((n - k + 3) % 2) * binom(4, s);
            long long mid = (n - k + 4) * binom(4, s - 1) - binom(4, s);
            long long full = binom(k - t, s) + binom(t, s) + mid;
            if (!(lhs <= mid && g_s_upper(n, k, s) <= full && full <= h_s(n, k, t, s)))
              g_chain_failures.push_back(
                  json{{"n", n}, {"k", k}, {"s", s}, {"t", t}, {"lhs", lhs}, {"mid", mid}});
            ++g_exact_cells;
            if (g_s(n, k, s) <= h_s(n, k, t, s)) ++g_exact_holds;
          }
      }
    }

    // construction spot checks: independent vertices attached to C of a
    // member must respect the per-case clique bound
    if (k <= 12) {
      for (int rr = 1; rr <= l - 2; ++rr) {
        for (const auto& mem : enumerate_family(k, k, rr)) {
          for (int extra = 1; extra <= 2; ++extra) {
            Graph g = mem.graph;
            int base = g.n;
            g.n += extra;
            for (int t = 0; t < extra; ++t) g.adj.push_back(0);
            for (int t = 0; t < extra; ++t)
              for (int c : mem.desc.C) g.add_edge(base + t, c);
            auto circ = circumference(g);
            if (!is_two_connected(g) || (circ && circ->first >= k)) {
              tally.skip();
              continue;
            }
            int n = g.n;
            for (int s : ss) {
              if (s > l) continue;
              long long bound;
              auto tag = mem.desc.special;
              if (tag == SpecialTag::F2) {
                int gamma = std::min(l - rr + 2, l);
                bound = h_s(n, k, gamma, s);
                for (int t = gamma; t <= l; ++t) bound = std::min(bound, h_s(n, k, t, s));
              } else if (tag == SpecialTag::F5) {
                bound = h_s(n, k, l, s);
              } else if (tag == SpecialTag::F0 || tag == SpecialTag::F4) {
                bound = g_s(n, k, s);
                for (int t = 4; t <= l; ++t) bound = std::min(bound, h_s(n, k, t, s));
              } else {
                bound = h_s(n, k, l - rr + 1, s);
                for (int t = l - rr + 1; t <= l; ++t) bound = std::min(bound, h_s(n, k, t, s));
              }
              long long ns = count_cliques(g, s);
              if (ns <= bound)
                tally.pass();
              else
                tally.fail({r.suite, graph6_encode(g),
                            json{{"k", k}, {"r", rr}, {"s", s}, {"n", n},
                                 {"member", graph6_encode(mem.graph)}},
                            std::to_string(ns), "<= " + std::to_string(bound),
                            "clique bound over a member-containing host"});
            }
          }
        }
      }
    }
  }

  r.observations["g_chain_cells"] = g_chain_cells;
  r.observations["g_chain_failures"] = g_chain_failures;
  r.observations["g_exact_cells"] = g_exact_cells;
  r.observations["g_exact_holds"] = g_exact_holds;
  if (!g_chain_failures.empty())
    r.paper_notes.push_back(
        "the verbatim slack term i*C(4,s) breaks the printed auxiliary inequality on odd-parity "
        "cells (first at s=2 with n-k+3 odd); the exact count's i*(C(4,s)-C(3,s)) term satisfies "
        "the whole chain. Cells listed in observations.g_chain_failures.");
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// fan
// ---------------------------------------------------------------------------

CheckReport check_fan(int n_max, const std::vector<int>& rs, const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "fan";
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"r", rs}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["r"] = rs;
  r.paper_notes.push_back(
      "at equality the components of G-{a,b} are complete blocks on r-2 vertices, each fully "
      "joined to both a and b (a K_r block would carry an a-b path on r+2 vertices).");

  struct Local {
    Tally tally;
    long long equality = 0;
    json cases = json::array();
  };
  Tally tally;
  long long equality = 0;
  json equality_cases = json::array();
  for (int n = 3; n <= top; ++n) {
    const auto& keys = enumerate_two_connected_keys(n);
    r.graphs_examined += static_cast<long long>(keys.size());
    parallel_over<Local>(
        static_cast<long long>(keys.size()), opt.jobs,
        [&](Local& local, long long i) {
          Graph g = graph_from_key(keys[i]);
          long long e = g.edge_count();
          for (auto [a, b] : g.edges()) {
            auto len = longest_path_between(g, a, b);
            for (int rr : rs) {
              if (!len || *len > rr) {
                local.tally.skip();
                continue;
              }
              long long bound2 = static_cast<long long>(rr - 3) * (n - 2) + 2 * (2LL * n - 3);
              if (2 * e > bound2) {
                local.tally.fail({r.suite, graph6_encode(g),
                                  json{{"n", n}, {"r", rr}, {"a", a}, {"b", b}},
                                  std::to_string(e), "<= " + std::to_string(bound2) + "/2",
                                  "edge bound for bounded a-b path order"});
                continue;
              }
              if (2 * e == bound2) {
                ++local.equality;
                VertexSet drop;
                drop.add(a);
                drop.add(b);
                Graph rest = without_vertices(g, drop);
                bool ok = g.has_edge(a, b);
                std::uint64_t todo = VertexSet::full(rest.n).bits;
                while (ok && todo) {
                  std::uint64_t comp = reach(rest, std::countr_zero(todo), VertexSet(todo)).bits;
                  todo &= ~comp;
                  int sz = std::popcount(comp);
                  if (sz != rr - 2) ok = false;
                  for (std::uint64_t mm = comp; ok && mm; mm &= mm - 1)
                    ok = std::popcount(rest.adj[std::countr_zero(mm)] & comp) == sz - 1;
                }
                if (ok) {
                  local.tally.pass();
                  local.cases.push_back(
                      json{{"graph6", graph6_encode(g)}, {"r", rr}, {"a", a}, {"b", b}});
                } else {
                  local.tally.fail({r.suite, graph6_encode(g),
                                    json{{"n", n}, {"r", rr}, {"a", a}, {"b", b}},
                                    "equality without block structure",
                                    "complete (r-2)-blocks joined to a,b", "equality structure"});
                }
                continue;
              }
              local.tally.pass();
            }
          }
        },
        [&](Local&& local) {
          tally.merge(std::move(local.tally));
          equality += local.equality;
          for (auto& c : local.cases) equality_cases.push_back(c);
        });
  }
  r.observations["equality_cases"] = equality;
  r.observations["equality_examples"] = equality_cases;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// conjecture search (records candidates, never hard-fails)
// ---------------------------------------------------------------------------

CheckReport search_conjecture(int n_max, const std::vector<int>& rs, const std::vector<int>& ss,
                              const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "conjecture";
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"r", rs}, {"s", ss}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["r"] = rs;
  r.config["s"] = ss;

  struct Local {
    Tally tally;
    json hits = json::array();
  };
  Tally tally;
  json hits = json::array();
  for (int n = 3; n <= top; ++n) {
    const auto& keys = enumerate_two_connected_keys(n);
    r.graphs_examined += static_cast<long long>(keys.size());
    parallel_over<Local>(
        static_cast<long long>(keys.size()), opt.jobs,
        [&](Local& local, long long i) {
          Graph g = graph_from_key(keys[i]);
          auto profile = clique_profile(g);
          for (auto [a, b] : g.edges()) {
            std::uint64_t lens = cycle_lengths_through_edge(g, a, b);
            for (int rr : rs)
              for (int s : ss) {
                long long ns = s < static_cast<int>(profile.size()) ? profile[s] : 0;
                if (ns <= conjecture_bound(n, rr, s)) {
                  local.tally.skip();
                  continue;
                }
                local.tally.pass();  // search: every sieved point is examined, never failed
                if (!any_length_at_least(lens, rr))
                  local.hits.push_back(json{{"graph6", graph6_encode(g)},
                                            {"n", n},
                                            {"r", rr},
                                            {"s", s},
                                            {"a", a},
                                            {"b", b},
                                            {"cliques", ns}});
              }
          }
        },
        [&](Local&& local) {
          tally.merge(std::move(local.tally));
          for (auto& h : local.hits) hits.push_back(h);
        });
  }
  r.observations["counterexample_candidates"] = hits;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// classify_main
// ---------------------------------------------------------------------------

CheckReport classify_theorem_1_1(int n_max, int k, int s, const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "classify_main";
  int l = ell(k);
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"k", k}, {"s", s}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["k"] = k;
  r.config["s"] = s;
  if (k == 10) r.paper_notes.push_back(kNoteH10);

  long long bucket_small = 0, bucket_h = 0, bucket_star = 0;
  json none_list = json::array();
  Tally tally;
  long long examined = 0;
  for (int n = 3; n <= top; ++n) {
    const auto& keys = enumerate_two_connected_keys(n);
    examined += static_cast<long long>(keys.size());
    for (std::uint64_t key : keys) {
      if (n < k) {
        tally.skip();
        continue;
      }
      Graph g = graph_from_key(key);
      auto circ = circumference(g);
      if (circ && circ->first >= k) {
        tally.skip();
        continue;
      }
      if (count_cliques(g, s) <= h_s(n, k, l - 1, s)) {
        tally.skip();
        continue;
      }
      if (s == 3 && (k == 9 || k == 10)) {
        ++bucket_small;
        tally.pass();
        continue;
      }
      if (k % 2 == 1 && k != 7) {
        if (contains_subgraph(build_h({n, k, l}), g)) {
          ++bucket_h;
          tally.pass();
          continue;
        }
      } else if (star_forest_after_deletion(g, l)) {
        ++bucket_star;
        tally.pass();
        continue;
      }
      tally.pass();  // classification suite: findings instead of failures
      none_list.push_back(json{{"graph6", graph6_encode(g)}, {"n", n}});
    }
  }
  r.graphs_examined = examined;
  r.observations["bucket_small_s3"] = bucket_small;
  r.observations["bucket_subgraph_of_H"] = bucket_h;
  r.observations["bucket_star_forest"] = bucket_star;
  r.observations["bucket_none"] = none_list;
  r.observations["vacuous"] =
      bucket_small + bucket_h + bucket_star + static_cast<long long>(none_list.size()) == 0;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// corollary_structures
// ---------------------------------------------------------------------------

CheckReport check_corollary_structures(int n_max, int k, int delta, int s,
                                       const VerifyOptions& opt) {
  Timer timer;
  CheckReport r;
  r.suite = "corollary_structures";
  int l = ell(k);
  int top = suite_scale(n_max, opt);
  r.grid = {{"n_max", top}, {"k", k}, {"delta", delta}, {"s", s}};
  r.config = base_config(r.suite, opt);
  r.config["n_max"] = n_max;
  r.config["k"] = k;
  r.config["delta"] = delta;
  r.config["s"] = s;
  Tally tally;

  // cone reduction: no path on k-1 vertices => the cone is 2-connected with
  // circumference below k
  long long coned = 0;
  for (int n = 2; n <= std::min(top, 8); ++n) {
    for (std::uint64_t key : enumerate_connected_keys(n)) {
      Graph g = graph_from_key(key);
      auto lp = longest_s_path(g, VertexSet::full(g.n));
      if (lp && lp->first > k - 2) {
        tally.skip();
        continue;
      }
      Graph cone(g.n + 1);
      for (auto [u, v] : g.edges()) cone.add_edge(u, v);
      for (int v = 0; v < g.n; ++v) cone.add_edge(g.n, v);
      auto circ = circumference(cone);
      ++coned;
      if (is_two_connected(cone) && (!circ || circ->first < k))
        tally.pass();
      else
        tally.fail({r.suite, graph6_encode(g), json{{"k", k}, {"n", n}},
                    "cone breaks the reduction", "2-connected, circumference below k",
                    "cone construction"});
    }
  }
  r.observations["coned_graphs"] = coned;

  // positive control: Z minus any edge embeds into Z
  {
    int nz = k + 2 * delta - 3;
    Graph z = build_z(nz, k, delta);
    for (auto [a, b] : z.edges()) {
      Graph ze = z;
      ze.adj[a] &= ~(std::uint64_t(1) << b);
      ze.adj[b] &= ~(std::uint64_t(1) << a);
      if (contains_subgraph(z, ze))
        tally.pass();
      else
        tally.fail({r.suite, graph6_encode(ze), json{{"k", k}, {"delta", delta}},
                    "edge-deleted copy does not embed", "embeds", "Z subgraph control"});
    }
  }

  // census of the member/Z/H trichotomy
  std::vector<Graph> members;
  {
    std::set<std::string> seen;
    auto add = [&](const Graph& g) {
      if (g.n > top) return;
      if (seen.insert(canonical_form(g)).second) members.push_back(g);
    };
    for (int m = k; m <= top; ++m) {
      for (int rr : {1, l - 1, l}) {
        if (rr < 1 || rr > l) continue;
        if (k % 2 == 1 && rr == l) continue;
        for (auto& fm : enumerate_family(m, k, rr)) add(fm.graph);
      }
      if (k % 2 == 0) {
        for (SpecialTag tag : {SpecialTag::F2, SpecialTag::F5}) {
          try {
            add(build_special(tag, m, k, 2).graph);
          } catch (const InvalidInput&) {
          }
        }
      }
    }
    if (k == 10) {
      try {
        add(build_special(SpecialTag::F0, 10, 10, 2).graph);
        add(build_special(SpecialTag::F4, 11, 10, 2).graph);
      } catch (const InvalidInput&) {
      }
    }
    if (k % 2 == 0) add(build_f_ell(l));
  }
  long long qualifying = 0, via_member = 0, via_z = 0, via_h = 0;
  for (int n = std::max(3, k); n <= top; ++n) {
    const auto& keys = enumerate_two_connected_keys(n);
    r.graphs_examined += static_cast<long long>(keys.size());
    for (std::uint64_t key : keys) {
      Graph g = graph_from_key(key);
      int dg = min_degree(g);
      if (dg != delta || dg < 2 || l - 1 < dg + 1 || k < 9) {
        tally.skip();
        continue;
      }
      auto circ = circumference(g);
      if (circ && circ->first >= k) {
        tally.skip();
        continue;
      }
      if (count_cliques(g, s) <= bound_pair_max(n, k, l - 1, delta + 1, s)) {
        tally.skip();
        continue;
      }
      ++qualifying;
      bool ok = false;
      if (find_first_embedding(g, members)) {
        ok = true;
        ++via_member;
      }
      if (!ok && delta >= 2 && (n - k + delta) % (delta - 1) == 0 && n >= k - delta &&
          k - delta >= delta + 1) {
        if (contains_subgraph(build_z(n, k, delta), g)) {
          ok = true;
          ++via_z;
        }
      }
      if (!ok && contains_subgraph(build_h({n, k, delta}), g)) {
        ok = true;
        ++via_h;
      }
      if (ok)
        tally.pass();
      else
        tally.fail({r.suite, graph6_encode(g),
                    json{{"n", n}, {"k", k}, {"delta", delta}, {"s", s}},
                    "none of member/Z/H", "one of member/Z/H",
                    "trichotomy for dense min-degree graphs"});
    }
  }
  r.observations["qualifying"] = qualifying;
  r.observations["via_member"] = via_member;
  r.observations["via_Z"] = via_z;
  r.observations["via_H"] = via_h;
  r.observations["vacuous"] = qualifying == 0;
  finish(r, std::move(tally), timer);
  return r;
}

// ---------------------------------------------------------------------------
// single-record recheck
// ---------------------------------------------------------------------------

bool recheck_counterexample(const Counterexample& ce) {
  const json& p = ce.params;
  if (ce.suite == "erdos_gallai") {
    Graph g = graph6_decode(ce.graph6);
    int k = p.at("k");
    auto circ = circumference(g);
    return (!circ || circ->first < k) &&
           2LL * g.edge_count() > static_cast<long long>(k - 1) * (g.n - 1);
  }
  if (ce.suite == "kopylov_luo") {
    Graph g = graph6_decode(ce.graph6);
    int k = p.at("k"), s = p.at("s");
    auto circ = circumference(g);
    return is_two_connected(g) && (!circ || circ->first < k) &&
           count_cliques(g, s) > bound_pair_max(g.n, k, 2, ell(k), s);
  }
  if (ce.suite == "main_lemma") {
    int k = p.at("k");
    if (p.contains("i")) {
      int m = p.at("m"), i = p.at("i"), j = p.at("j");
      int len = j - i - 1;
      return !(len > m - k && len <= m - 2 * ell(k));
    }
    Graph g = graph6_decode(ce.graph6);
    int l = ell(k);
    VertexSet h = disintegration(g, l - 1);
    if (h.empty()) return false;
    auto sp = longest_s_path(g, h);
    if (!sp || sp->first < k) return false;
    std::vector<Graph> mem;
    for (int rr = 1; rr <= l; ++rr)
      for (auto& fm : enumerate_family(sp->first, k, rr)) mem.push_back(fm.graph);
    return !find_first_embedding(g, mem).has_value();
  }
  if (ce.suite == "theorem_main") {
    Graph g = graph6_decode(ce.graph6);
    int k = p.at("k"), alpha = p.at("alpha"), beta = p.at("beta"), s = p.at("s");
    TheoremMainState st{k, alpha, beta, s, ell(k), enumerate_k_family({k, alpha, k + 1})};
    auto circ = circumference(g);
    if (circ && circ->first >= k) return false;
    if (count_cliques(g, s) <= bound_pair_max(g.n, k, st.l - alpha, beta, s)) return false;
    return theorem_main_qualifies(st, g) && !theorem_main_conclusion(st, g);
  }
  if (ce.suite == "prop_paths") {
    Graph g = graph6_decode(ce.graph6);
    std::string kind = p.at("kind");
    int k = p.at("k");
    if (kind == "star_forest") {
      // record stores the host; re-test directly is not possible without the
      // member split, so recheck degenerates to the stored observation
      return true;
    }
    if (kind.rfind("p31", 0) == 0) return true;
    int a = p.at("a"), b = p.at("b");
    if (kind == "edge_k2") return !(cycle_lengths_through_edge(g, a, b) >> (k - 2) & 1);
    if (kind == "edge_k1") return !(cycle_lengths_through_edge(g, a, b) >> (k - 1) & 1);
    Graph gab = g.has_edge(a, b) ? g : with_edge(g, a, b);
    auto lens = cycle_lengths_through_edge(gab, a, b);
    if (kind == "nonedge_k1") return !(lens >> (k - 1) & 1);
    if (kind == "nonedge_k") return !any_length_at_least(lens, k);
    if (kind == "nonedge_to_C_k2") return !any_length_at_least(lens, k - 2);
    if (kind == "nonedge_AC_k1") return !any_length_at_least(lens, k - 1);
    return false;
  }
  if (ce.suite == "lemma_counts") {
    if (p.contains("t"))
      return f_s(p.at("n"), p.at("k"), p.at("r"), p.at("s")) >
             h_s(p.at("n"), p.at("k"), p.at("t"), p.at("s"));
    return true;
  }
  if (ce.suite == "fan") {
    Graph g = graph6_decode(ce.graph6);
    int rr = p.at("r"), a = p.at("a"), b = p.at("b");
    auto len = longest_path_between(g, a, b);
    if (!len || *len > rr) return false;
    long long bound2 = static_cast<long long>(rr - 3) * (g.n - 2) + 2 * (2LL * g.n - 3);
    long long e2 = 2LL * g.edge_count();
    return e2 >= bound2;  // over the bound, or an equality structure record
  }
  if (ce.suite == "conjecture") {
    Graph g = graph6_decode(ce.graph6);
    int rr = p.at("r"), s = p.at("s"), a = p.at("a"), b = p.at("b");
    if (count_cliques(g, s) <= conjecture_bound(g.n, rr, s)) return false;
    return !any_length_at_least(cycle_lengths_through_edge(g, a, b), rr);
  }
  if (ce.suite == "corollary_structures") return true;
  return false;
}

}  // namespace egstab
