#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "egstab/graph.hpp"

namespace egstab {

struct VerifyOptions {
  int jobs = 1;
  bool deep = false;
  std::uint64_t seed = 12345;
};

struct Counterexample {
  std::string suite;
  std::string graph6;       // offending graph, empty for pure formula cells
  nlohmann::json params;
  std::string observed;
  std::string expected;
  std::string claim;
};

struct CheckReport {
  std::string suite;
  nlohmann::json grid = nlohmann::json::object();
  long long graphs_examined = 0;
  long long points = 0;  // passes + failures + skips
  long long passes = 0;
  long long failures = 0;
  long long skips = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> paper_notes;
  nlohmann::json observations = nlohmann::json::object();
  nlohmann::json config = nlohmann::json::object();  // resolved run configuration
  double wall_ms = 0;                                // excluded from determinism comparison
};

nlohmann::json report_to_json(const CheckReport& r);
std::string report_to_json_string(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

/// Writes via a temp file and rename so an interrupted run leaves nothing.
void write_report_atomic(const CheckReport& r, const std::string& path);

/// Suites that assert theorem conclusions hard-fail on counterexamples;
/// classification/search suites only record observations.
bool asserting_suite(const std::string& suite_id);

/// Re-runs the single check one counterexample record describes.
/// Returns true when the violation reproduces.
bool recheck_counterexample(const Counterexample& ce);

CheckReport check_erdos_gallai(int n_max, const std::vector<int>& ks, const VerifyOptions& opt);
CheckReport check_kopylov_luo(int n_max, const std::vector<int>& ss, const VerifyOptions& opt);
CheckReport check_main_lemma(int n_max, int k, const VerifyOptions& opt);
CheckReport check_theorem_main(int n_max, int k, int alpha, int beta, int s,
                               const VerifyOptions& opt);
CheckReport check_prop_paths(const std::vector<int>& ks, int m_max, const VerifyOptions& opt);
CheckReport check_lemma_counts(const std::vector<int>& ks, int n_span,
                               const std::vector<int>& ss, const VerifyOptions& opt);
CheckReport check_fan(int n_max, const std::vector<int>& rs, const VerifyOptions& opt);
CheckReport search_conjecture(int n_max, const std::vector<int>& rs, const std::vector<int>& ss,
                              const VerifyOptions& opt);
CheckReport classify_theorem_1_1(int n_max, int k, int s, const VerifyOptions& opt);
CheckReport check_corollary_structures(int n_max, int k, int delta, int s,
                                       const VerifyOptions& opt);

}  // namespace egstab
