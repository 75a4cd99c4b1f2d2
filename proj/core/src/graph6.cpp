#include "egstab/graph6.hpp"

namespace egstab {

namespace {

constexpr int kBias = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int chunk = 0;
    for (int j = 0; j < 6; ++j) {
      chunk <<= 1;
      if (i + j < bits.size() && bits[i + j]) chunk |= 1;
    }
    out.push_back(static_cast<char>(chunk + kBias));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  if (g.n < 1 || g.n > kMaxVertices) throw CapacityExceeded("graph6 encoder handles 1..64 vertices");
  std::string out;
  if (g.n <= 62) {
    out.push_back(static_cast<char>(g.n + kBias));
  } else {
    // 63..258047 use '~' followed by 18 bits in three bytes; only need <= 64.
    out.push_back('~');
    out.push_back(static_cast<char>(((g.n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((g.n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((g.n & 0x3f) + kBias));
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph graph6_decode(const std::string& text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6 record truncated");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < kBias || c > 126) throw ParseError("graph6 byte out of range");
    return c - kBias;
  };

  if (text.empty()) throw ParseError("empty graph6 record");
  long n;
  if (text[0] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') throw ParseError("graph6 8-byte sizes unsupported");
    long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  if (n < 1 || n > kMaxVertices) throw CapacityExceeded("graph6 record exceeds 64 vertices");

  Graph g(static_cast<int>(n));
  long nbits = n * (n - 1) / 2;
  int chunk = 0, avail = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        chunk = next();
        avail = 6;
      }
      if ((chunk >> (avail - 1)) & 1) g.add_edge(i, j);
      --avail;
    }
  }
  // padding bits must be zero and nothing may follow
  if (avail > 0 && (chunk & ((1 << avail) - 1)) != 0) throw ParseError("graph6 nonzero padding");
  (void)nbits;
  if (pos != text.size()) throw ParseError("trailing garbage after graph6 record");
  return g;
}

}  // namespace egstab
