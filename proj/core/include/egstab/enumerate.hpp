#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

/// Non-isomorphic connected graphs on n vertices, one canonical representative
/// per class, sorted by canonical key. Built by vertex augmentation from the
/// (n-1)-vertex classes with canonical dedup; memoized per process.
/// n > 10 needs allow_large (n <= 11 supported).
const std::vector<std::uint64_t>& enumerate_connected_keys(int n, bool allow_large = false);

/// Keys of the 2-connected classes among enumerate_connected_keys(n).
/// Results are cached in EGSTAB_CACHE_DIR when that variable is set, one
/// graph6 line per class under a "#egstab-enum n=<n> twoconnected" header.
const std::vector<std::uint64_t>& enumerate_two_connected_keys(int n, bool allow_large = false);

std::vector<Graph> enumerate_connected(int n, bool allow_large = false);
std::vector<Graph> enumerate_two_connected(int n, bool allow_large = false);

void for_each_two_connected(int n, const std::function<void(const Graph&)>& fn,
                            bool allow_large = false);

/// Cache file body for one level (header line plus graph6 lines).
std::string enum_cache_text(int n, const std::vector<std::uint64_t>& keys);

}  // namespace egstab
