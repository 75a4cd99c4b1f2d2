// egstab: generation, formula tables, exact solvers and verification suites
// for small-graph circumference/clique-count bounds.
//
// Machine output (graph6 / CSV / JSON) goes to stdout or --out; prose goes to
// stderr. Exit codes: 0 clean, 1 an asserting suite recorded a mathematical
// counterexample, 2 internal error, 64 usage, 74 I/O.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "egstab/algorithms.hpp"
#include "egstab/canonical.hpp"
#include "egstab/enumerate.hpp"
#include "egstab/families.hpp"
#include "egstab/formulas.hpp"
#include "egstab/graph6.hpp"
#include "egstab/verify.hpp"

using namespace egstab;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;
constexpr int kExitCounterexample = 1;
constexpr int kExitInternal = 2;

// inclusive "a..b" ranges and comma lists, e.g. "9..15" or "2,3,5"
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(item));
    } else {
      int lo = std::stoi(item.substr(0, dots));
      int hi = std::stoi(item.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw CLI::ValidationError("range", "empty range");
  return out;
}

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::ios_base::failure("cannot open output file: " + path);
    f << text;
  }
};

std::vector<std::string> read_lines(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw std::ios_base::failure("cannot open input file: " + path);
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0, k = 0, a = 0, delta = 0, l = 0, m = 0, r = 0, alpha = 0, m_max = 0;
  std::string out, format = "graph6";
};

int run_gen(const GenArgs& args) {
  std::vector<std::pair<Graph, std::string>> results;  // graph + descriptor text
  auto param_desc = [&](std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream s;
    s << "family=" << args.family << "\n";
    for (auto [key, val] : kv) s << key << "=" << val << "\n";
    return s.str();
  };
  if (args.family == "h") {
    results.emplace_back(build_h({args.n, args.k, args.a}),
                         param_desc({{"n", args.n}, {"k", args.k}, {"a", args.a}}));
  } else if (args.family == "z") {
    results.emplace_back(build_z(args.n, args.k, args.delta),
                         param_desc({{"n", args.n}, {"k", args.k}, {"delta", args.delta}}));
  } else if (args.family == "fell") {
    results.emplace_back(build_f_ell(args.l), param_desc({{"ell", args.l}}));
  } else if (args.family == "e") {
    results.emplace_back(build_e(args.m ? args.m : args.n),
                         param_desc({{"m", args.m ? args.m : args.n}}));
  } else if (args.family == "gnk3") {
    results.emplace_back(build_gnk3(args.n, args.k),
                         param_desc({{"n", args.n}, {"k", args.k}}));
  } else if (args.family.size() == 2 && args.family[0] == 'F' && args.family[1] >= '0' &&
             args.family[1] <= '5') {
    SpecialTag tag = static_cast<SpecialTag>(args.family[1] - '0');
    auto mem = build_special(tag, args.m, args.k, args.r);
    results.emplace_back(mem.graph, mem.desc.summary());
  } else if (args.family.rfind("type", 0) == 0 && args.family.size() == 5) {
    int want = args.family[4] - '1';
    for (auto& mem : enumerate_family(args.m, args.k, args.r))
      if (static_cast<int>(mem.desc.type) == want)
        results.emplace_back(mem.graph, mem.desc.summary());
  } else if (args.family == "kfam") {
    for (auto& mem : enumerate_k_family_members({args.k, args.alpha, args.m_max}))
      results.emplace_back(mem.graph, "id=" + mem.id + "\n");
  } else {
    throw CLI::ValidationError("--family", "unknown family: " + args.family);
  }

  if (args.format == "json") {
    std::ostringstream out;
    for (auto& [g, desc] : results)
      out << json{{"graph6", graph6_encode(g)}, {"descriptor", desc}}.dump() << "\n";
    Output{args.out}.write(out.str());
    return 0;
  }
  std::ostringstream g6, desc;
  for (std::size_t i = 0; i < results.size(); ++i) {
    g6 << graph6_encode(results[i].first) << "\n";
    if (results.size() > 1) desc << "record=" << i << "\n";
    desc << results[i].second;
  }
  Output{args.out}.write(g6.str());
  if (!args.out.empty()) Output{args.out + ".desc"}.write(desc.str());
  return 0;
}

// ---------------------------------------------------------------------------
// formulas
// ---------------------------------------------------------------------------

struct FormulaArgs {
  std::string table;
  std::string n = "0", k = "0", a = "0", r = "0", s = "2", a2 = "0";
  std::string out, format = "csv";
};

int run_formulas(const FormulaArgs& args) {
  auto ns = parse_range(args.n), ks = parse_range(args.k), as = parse_range(args.a),
       rs = parse_range(args.r), ss = parse_range(args.s), a2s = parse_range(args.a2);
  std::ostringstream csv;
  json rows = json::array();
  bool header_done = false;
  auto emit = [&](std::initializer_list<std::pair<const char*, long long>> kv,
                  const std::string& value) {
    if (args.format == "csv") {
      if (!header_done) {
        bool first = true;
        for (auto [key, val] : kv) {
          (void)val;
          csv << (first ? "" : ",") << key;
          first = false;
        }
        csv << ",value\n";
        header_done = true;
      }
      bool first = true;
      for (auto [key, val] : kv) {
        (void)key;
        csv << (first ? "" : ",") << val;
        first = false;
      }
      csv << "," << value << "\n";
    } else {
      json row;
      for (auto [key, val] : kv) row[key] = val;
      row["value"] = value;
      rows.push_back(row);
    }
  };
  for (int n : ns)
    for (int k : ks)
      for (int s : ss) {
        if (args.table == "h_s") {
          for (int a : as)
            emit({{"n", n}, {"k", k}, {"a", a}, {"s", s}}, std::to_string(h_s(n, k, a, s)));
        } else if (args.table == "f_s") {
          for (int r : rs)
            emit({{"n", n}, {"k", k}, {"r", r}, {"s", s}}, std::to_string(f_s(n, k, r, s)));
        } else if (args.table == "g_s") {
          emit({{"n", n}, {"k", k}, {"s", s}}, std::to_string(g_s(n, k, s)));
        } else if (args.table == "bound_pair_max") {
          for (int a : as)
            for (int a2 : a2s)
              emit({{"n", n}, {"k", k}, {"a1", a}, {"a2", a2}, {"s", s}},
                   std::to_string(bound_pair_max(n, k, a, a2, s)));
        } else if (args.table == "eg") {
          Rational b = eg_bound(k, n);
          emit({{"n", n}, {"k", k}}, std::to_string(b.num) + "/" + std::to_string(b.den));
        } else if (args.table == "fan") {
          for (int r : rs) {
            Rational b = fan_bound(r, n);
            emit({{"n", n}, {"r", r}}, std::to_string(b.num) + "/" + std::to_string(b.den));
          }
        } else if (args.table == "conjecture") {
          for (int r : rs)
            emit({{"n", n}, {"r", r}, {"s", s}}, std::to_string(conjecture_bound(n, r, s)));
        } else if (args.table == "ell") {
          emit({{"k", k}}, std::to_string(ell(k)));
        } else {
          throw CLI::ValidationError("--table", "unknown table: " + args.table);
        }
      }
  Output{args.out}.write(args.format == "csv" ? csv.str() : rows.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string op, in, out, pattern;
  int s = 2, alpha = 1, start = 0;
};

int run_solve(const SolveArgs& args) {
  auto lines = read_lines(args.in);
  std::optional<Graph> pattern;
  if (!args.pattern.empty()) pattern = graph6_decode(args.pattern);
  std::ostringstream out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Graph g = graph6_decode(lines[i]);
    auto t0 = std::chrono::steady_clock::now();
    json rec{{"index", i}};
    if (args.op == "circ") {
      auto c = circumference(g);
      rec["result"] = c ? json(c->first) : json(nullptr);
      rec["witness"] = c ? json(c->second.v) : json(nullptr);
    } else if (args.op == "cliques") {
      rec["result"] = count_cliques(g, args.s);
      rec["witness"] = nullptr;
    } else if (args.op == "disint") {
      rec["result"] = disintegration(g, args.alpha).to_vector();
      rec["witness"] = nullptr;
    } else if (args.op == "posa") {
      Path p = greedy_maximal_path(g, args.start < g.n && args.start >= 0 ? args.start : 0);
      auto res = posa_cycle(g, p);
      rec["result"] = res.cycle.length();
      rec["witness"] = json{{"path", p.v},
                            {"cycle", res.cycle.v},
                            {"guarantee", res.guarantee},
                            {"detour", res.used_detour}};
    } else if (args.op == "subiso") {
      if (!pattern) throw CLI::ValidationError("--pattern", "--op subiso needs --pattern");
      auto emb = contains_subgraph(g, *pattern);
      rec["result"] = emb.has_value();
      rec["witness"] = emb ? json(*emb) : json(nullptr);
    } else {
      throw CLI::ValidationError("--op", "unknown op: " + args.op);
    }
    auto t1 = std::chrono::steady_clock::now();
    rec["micros"] = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    out << rec.dump() << "\n";
  }
  Output{args.out}.write(out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify / report
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int n_max = 8;
  std::string k, s, r;
  int alpha = 0, beta = 2, delta = 2, m_max = 0, n_span = 20;
  bool deep = false;
  int jobs = 1;
  std::uint64_t seed = 12345;
  std::string out;
};

CheckReport dispatch_suite(const VerifyArgs& a) {
  VerifyOptions opt{a.jobs, a.deep, a.seed};
  auto ks = a.k.empty() ? std::vector<int>{} : parse_range(a.k);
  auto ss = a.s.empty() ? std::vector<int>{} : parse_range(a.s);
  auto rs = a.r.empty() ? std::vector<int>{} : parse_range(a.r);
  if (a.suite == "erdos_gallai") {
    if (ks.empty())
      for (int k = 4; k <= a.n_max; ++k) ks.push_back(k);
    return check_erdos_gallai(a.n_max, ks, opt);
  }
  if (a.suite == "kopylov_luo") {
    if (ss.empty()) ss = {2, 3, 4};
    return check_kopylov_luo(a.n_max, ss, opt);
  }
  if (a.suite == "main_lemma") return check_main_lemma(a.n_max, ks.empty() ? 5 : ks[0], opt);
  if (a.suite == "theorem_main")
    return check_theorem_main(a.n_max, ks.empty() ? 7 : ks[0], a.alpha, a.beta,
                              ss.empty() ? 2 : ss[0], opt);
  if (a.suite == "prop_paths")
    return check_prop_paths(ks.empty() ? std::vector<int>{10, 12} : ks, a.m_max, opt);
  if (a.suite == "lemma_counts")
    return check_lemma_counts(ks.empty() ? std::vector<int>{9, 10, 11, 12, 13, 14} : ks, a.n_span,
                              ss.empty() ? std::vector<int>{2, 3, 4, 5} : ss, opt);
  if (a.suite == "fan")
    return check_fan(a.n_max, rs.empty() ? std::vector<int>{4, 5, 6, 7} : rs, opt);
  if (a.suite == "conjecture")
    return search_conjecture(a.n_max, rs.empty() ? std::vector<int>{4, 5, 6} : rs,
                             ss.empty() ? std::vector<int>{2, 3} : ss, opt);
  if (a.suite == "classify_main")
    return classify_theorem_1_1(a.n_max, ks.empty() ? 7 : ks[0], ss.empty() ? 2 : ss[0], opt);
  if (a.suite == "corollary_structures")
    return check_corollary_structures(a.n_max, ks.empty() ? 9 : ks[0], a.delta,
                                      ss.empty() ? 2 : ss[0], opt);
  throw CLI::ValidationError("--suite", "unknown suite: " + a.suite);
}

int emit_report(const CheckReport& r, const std::string& out_path) {
  if (out_path.empty())
    std::cout << report_to_json_string(r);
  else
    write_report_atomic(r, out_path);
  if (asserting_suite(r.suite) && r.failures > 0) return kExitCounterexample;
  return 0;
}

std::string range_from_json(const json& v) {
  if (v.is_array()) {
    std::string list;
    for (auto& x : v) list += (list.empty() ? "" : ",") + std::to_string(x.get<int>());
    return list;
  }
  return std::to_string(v.get<int>());
}

VerifyArgs args_from_config(const json& config) {
  VerifyArgs a;
  a.suite = config.at("suite").get<std::string>();
  a.n_max = config.value("n_max", 8);
  if (config.contains("k")) a.k = range_from_json(config["k"]);
  if (config.contains("s")) a.s = range_from_json(config["s"]);
  if (config.contains("r")) a.r = range_from_json(config["r"]);
  a.alpha = config.value("alpha", 0);
  a.beta = config.value("beta", 2);
  a.delta = config.value("delta", 2);
  a.m_max = config.value("m_max", 0);
  a.n_span = config.value("n_span", 20);
  a.deep = config.value("deep", false);
  a.jobs = config.value("jobs", 1);
  a.seed = config.value("seed", std::uint64_t{12345});
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bound verification for small 2-connected graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "construct family graphs as graph6");
  cgen->add_option("--family", gen.family, "h|z|fell|e|gnk3|F0..F5|type1..type4|kfam")->required();
  cgen->add_option("--n", gen.n, "vertex count");
  cgen->add_option("--k", gen.k, "circumference threshold");
  cgen->add_option("--a", gen.a, "H parameter a");
  cgen->add_option("--delta", gen.delta, "Z parameter delta");
  cgen->add_option("--ell", gen.l, "F(ell) parameter");
  cgen->add_option("--m", gen.m, "member order");
  cgen->add_option("--r", gen.r, "family parameter r");
  cgen->add_option("--alpha", gen.alpha, "K family alpha");
  cgen->add_option("--m-max", gen.m_max, "K family member order cap");
  cgen->add_option("--out", gen.out, "output file (descriptor goes to <out>.desc)");
  cgen->add_option("--format", gen.format, "graph6|json")
      ->check(CLI::IsMember({"graph6", "json"}));

  FormulaArgs formulas;
  auto* cform = app.add_subcommand("formulas", "closed-form bound tables");
  cform->add_option("--table", formulas.table,
                    "h_s|f_s|g_s|bound_pair_max|eg|fan|conjecture|ell")
      ->required();
  cform->add_option("--n", formulas.n, "n range, e.g. 9..15");
  cform->add_option("--k", formulas.k, "k range");
  cform->add_option("--a", formulas.a, "a range");
  cform->add_option("--a2", formulas.a2, "second a for bound_pair_max");
  cform->add_option("--r", formulas.r, "r range");
  cform->add_option("--s", formulas.s, "s range");
  cform->add_option("--out", formulas.out, "output file");
  cform->add_option("--format", formulas.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  SolveArgs solve;
  auto* csolve = app.add_subcommand("solve", "exact solvers over graph6 input");
  csolve->add_option("--op", solve.op, "circ|cliques|disint|posa|subiso")->required();
  csolve->add_option("--in", solve.in, "graph6 file, one record per line ('-' = stdin)");
  csolve->add_option("--s", solve.s, "clique size for --op cliques");
  csolve->add_option("--alpha", solve.alpha, "peeling threshold for --op disint");
  csolve->add_option("--start", solve.start, "path start vertex for --op posa");
  csolve->add_option("--pattern", solve.pattern, "pattern graph6 for --op subiso");
  csolve->add_option("--out", solve.out, "output file");

  int enum_n = 6;
  bool enum_deep = false;
  std::string enum_out;
  auto* cenum = app.add_subcommand("enumerate", "non-isomorphic 2-connected graphs");
  cenum->add_option("--n", enum_n, "vertex count (3..10; 11 behind --deep)")->required();
  cenum->add_flag("--deep", enum_deep, "allow the largest levels");
  cenum->add_option("--out", enum_out, "output file");

  VerifyArgs verify;
  auto* cver = app.add_subcommand("verify", "run one verification suite");
  cver->add_option("--suite", verify.suite,
                   "erdos_gallai|kopylov_luo|main_lemma|theorem_main|prop_paths|lemma_counts|"
                   "fan|conjecture|classify_main|corollary_structures")
      ->required();
  cver->add_option("--n-max", verify.n_max, "largest vertex count (default 8)");
  cver->add_option("--k", verify.k, "k value or range");
  cver->add_option("--s", verify.s, "s value or range");
  cver->add_option("--r", verify.r, "r value or range");
  cver->add_option("--alpha", verify.alpha, "alpha");
  cver->add_option("--beta", verify.beta, "beta");
  cver->add_option("--delta", verify.delta, "delta");
  cver->add_option("--m-max", verify.m_max, "member order cap");
  cver->add_option("--n-span", verify.n_span, "n range width for formula grids");
  cver->add_flag("--deep", verify.deep, "extend the exhaustive scale by one level");
  cver->add_option("--jobs", verify.jobs, "worker threads");
  cver->add_option("--seed", verify.seed, "seed for sampled constructions");
  cver->add_option("--out", verify.out, "report file (written atomically)");

  std::string report_in, report_summary, report_replay;
  int report_jobs = 0;
  auto* crep = app.add_subcommand("report", "summarize or replay a report");
  crep->add_option("--in", report_in, "report JSON file")->required();
  crep->add_option("--summary", report_summary, "write a CSV summary here ('-' = stdout)");
  crep->add_option("--replay", report_replay, "re-run the embedded config, write report here");
  crep->add_option("--jobs", report_jobs, "override jobs for --replay");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cgen) return run_gen(gen);
    if (*cform) return run_formulas(formulas);
    if (*csolve) return run_solve(solve);
    if (*cenum) {
      const auto& keys = enumerate_two_connected_keys(enum_n, enum_deep);
      Output{enum_out}.write(enum_cache_text(enum_n, keys));
      return 0;
    }
    if (*cver) return emit_report(dispatch_suite(verify), verify.out);
    if (*crep) {
      std::ifstream in(report_in);
      if (!in) throw std::ios_base::failure("cannot open report: " + report_in);
      json j = json::parse(in);
      CheckReport r = report_from_json(j);
      if (!report_summary.empty()) {
        std::ostringstream csv;
        csv << "suite,graphs_examined,points,passes,failures,skips\n"
            << r.suite << "," << r.graphs_examined << "," << r.points << "," << r.passes << ","
            << r.failures << "," << r.skips << "\n";
        Output{report_summary == "-" ? "" : report_summary}.write(csv.str());
      }
      if (!report_replay.empty()) {
        VerifyArgs a = args_from_config(r.config);
        if (report_jobs > 0) a.jobs = report_jobs;
        return emit_report(dispatch_suite(a), report_replay);
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "egstab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "egstab: " << e.what() << "\n";
    return kExitIo;
  } catch (const OutOfDomain& e) {
    std::cerr << "egstab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "egstab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "egstab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "egstab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
