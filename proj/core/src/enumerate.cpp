#include "egstab/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "egstab/canonical.hpp"
#include "egstab/graph6.hpp"

namespace egstab {

namespace {

std::mutex g_mutex;
std::map<int, std::vector<std::uint64_t>> g_connected;
std::map<int, std::vector<std::uint64_t>> g_twoconn;

void check_bounds(int n, bool allow_large) {
  if (n < 1) throw InvalidInput("enumeration needs n >= 1");
  if (n > 10 && !allow_large) throw InvalidInput("enumeration above n=10 needs explicit override");
  if (n > 11) throw CapacityExceeded("enumeration supports n <= 11");
}

std::filesystem::path cache_path(int n) {
  const char* dir = std::getenv("EGSTAB_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / ("twoconnected-n" + std::to_string(n) + ".g6");
}

// class counts of 2-connected graphs used to cross-check ingested lists
constexpr long long kTwoConnectedCounts[] = {0, 0,  0,   1,    3,     10,
                                             56, 468, 7123, 194066, 9743542};

// Ingest a cache file, possibly written by an external generator; every line
// is re-checked (decodes, n matches, 2-connected), canonicalized, and the
// class count is compared against the known table so a stale or incomplete
// file cannot poison results.
bool load_two_connected_cache(int n, std::vector<std::uint64_t>& out) {
  auto path = cache_path(n);
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line)) return false;
  std::string want = "#egstab-enum n=" + std::to_string(n) + " twoconnected";
  if (line != want) throw ParseError("enumeration cache has wrong header: " + path.string());
  out.clear();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Graph g = graph6_decode(line);
    if (g.n != n || !is_two_connected(g)) throw ParseError("enumeration cache entry invalid: " + line);
    out.push_back(canonical_key(g));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError("enumeration cache repeats an isomorphism class: " + path.string());
  if (n <= 10 && static_cast<long long>(out.size()) != kTwoConnectedCounts[n])
    throw ParseError("enumeration cache is incomplete: " + path.string());
  return true;
}

void store_two_connected_cache(int n, const std::vector<std::uint64_t>& keys) {
  auto path = cache_path(n);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << enum_cache_text(n, keys);
  }
  std::filesystem::rename(tmp, path, ec);  // write-then-rename, no partial files
}

std::vector<std::uint64_t> build_connected_level(int n) {
  std::vector<std::uint64_t> out;
  if (n == 1) {
    out.push_back(canonical_key(Graph(1)));
    return out;
  }
  const auto& parents = enumerate_connected_keys(n - 1, true);
  std::unordered_set<std::uint64_t> seen;
  // Every connected n-vertex graph arises from a connected (n-1)-vertex graph
  // by re-attaching a non-cut vertex, so augmenting every parent with every
  // non-empty neighborhood covers all classes.
  for (std::uint64_t pk : parents) {
    Graph parent = graph_from_key(pk);
    std::uint64_t subsets = (1ull << (n - 1)) - 1;
    for (std::uint64_t s = 1; s <= subsets; ++s) {
      Graph child = parent;
      child.n = n;
      child.adj.push_back(0);
      for (std::uint64_t m = s; m; m &= m - 1) {
        int u = std::countr_zero(m);
        child.adj[u] |= 1ull << (n - 1);
        child.adj[n - 1] |= 1ull << u;
      }
      std::uint64_t key = canonical_key(child);
      if (seen.insert(key).second) out.push_back(key);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<std::uint64_t>& enumerate_connected_keys(int n, bool allow_large) {
  check_bounds(n, allow_large);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_connected.find(n);
    if (it != g_connected.end()) return it->second;
  }
  if (n > 1) enumerate_connected_keys(n - 1, true);
  auto level = build_connected_level(n);
  std::lock_guard<std::mutex> lock(g_mutex);
  // map nodes are stable, so handing out references is safe
  return g_connected.emplace(n, std::move(level)).first->second;
}

const std::vector<std::uint64_t>& enumerate_two_connected_keys(int n, bool allow_large) {
  check_bounds(n, allow_large);
  if (n < 3) {
    static const std::vector<std::uint64_t> empty;
    return empty;
  }
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_twoconn.find(n);
    if (it != g_twoconn.end()) return it->second;
  }
  std::vector<std::uint64_t> keys;
  if (!load_two_connected_cache(n, keys)) {
    const auto& all = enumerate_connected_keys(n, allow_large);
    for (std::uint64_t k : all)
      if (is_two_connected(graph_from_key(k))) keys.push_back(k);
    store_two_connected_cache(n, keys);
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_twoconn.emplace(n, std::move(keys)).first->second;
}

std::vector<Graph> enumerate_connected(int n, bool allow_large) {
  std::vector<Graph> out;
  for (std::uint64_t k : enumerate_connected_keys(n, allow_large)) out.push_back(graph_from_key(k));
  return out;
}

std::vector<Graph> enumerate_two_connected(int n, bool allow_large) {
  std::vector<Graph> out;
  for (std::uint64_t k : enumerate_two_connected_keys(n, allow_large)) out.push_back(graph_from_key(k));
  return out;
}

void for_each_two_connected(int n, const std::function<void(const Graph&)>& fn, bool allow_large) {
  for (std::uint64_t k : enumerate_two_connected_keys(n, allow_large)) fn(graph_from_key(k));
}

std::string enum_cache_text(int n, const std::vector<std::uint64_t>& keys) {
  std::ostringstream out;
  out << "#egstab-enum n=" << n << " twoconnected\n";
  for (std::uint64_t k : keys) out << graph6_encode(graph_from_key(k)) << "\n";
  return out.str();
}

}  // namespace egstab
