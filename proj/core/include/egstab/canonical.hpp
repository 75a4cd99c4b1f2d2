#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

/// Canonical labeling by partition refinement plus backtracking over the
/// refined cells, with automorphism-orbit pruning. perm[v] is the canonical
/// position of vertex v; ties are broken by the lexicographically smallest
/// encoded adjacency triangle.
std::vector<int> canonical_labeling(const Graph& g);

/// Canonical byte string: graph6 of the canonically relabeled graph.
/// Equal strings <=> isomorphic graphs.
std::string canonical_form(const Graph& g);

/// Canonically relabeled copy of g.
Graph canonical_graph(const Graph& g);

/// Whole canonical form packed into one word (needs n <= 11 so the upper
/// triangle fits next to the vertex count). Ordering agrees with
/// canonical_form ordering for fixed n.
std::uint64_t canonical_key(const Graph& g);

/// Rebuild the graph a canonical_key encodes.
Graph graph_from_key(std::uint64_t key);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace egstab
