#include "spex/graph6.hpp"

namespace spex {

graph6_error::graph6_error(const std::string& msg, size_t off)
    : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}

// Printable 6-bit groups, offset 63, upper triangle column by column.
std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(const std::string& text) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > text.size()) throw graph6_error("truncated graph6 string", text.size());
  };
  auto sextet = [&]() {
    need(1);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw graph6_error("invalid graph6 character", pos);
    ++pos;
    return int(c) - 63;
  };

  if (text.empty()) throw graph6_error("empty graph6 string", 0);
  int n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw graph6_error("graph6 order beyond supported range", pos);
    int a = sextet(), b = sextet(), c = sextet();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = sextet();
  }
  if (n > Graph::max_vertices)
    throw graph6_error("graph order " + std::to_string(n) + " exceeds limit", 0);

  Graph g(n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = sextet();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw graph6_error("nonzero padding bits", pos - 1);
  if (pos != text.size()) throw graph6_error("trailing bytes after graph6 data", pos);
  return g;
}

}  // namespace spex
