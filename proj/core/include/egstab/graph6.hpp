#pragma once

#include <string>

#include "egstab/graph.hpp"

namespace egstab {

/// Standard graph6 encoding (not sparse6). One record per line, no header.
/// Bits cover the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 record. Rejects malformed headers, short payloads and
/// trailing garbage.
Graph graph6_decode(const std::string& text);

}  // namespace egstab
