#include "exa/graph6.hpp"

namespace exa {

namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  const int bits = pair_count(n);
  std::string out;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(n + kOffset));

  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw GraphError("empty graph6 string");

  for (char c : text)
    if (c < kOffset || c > 126)
      throw GraphError("graph6 character out of range: '" + std::string(1, c) + "'");
  if (text.front() == 126)
    throw GraphError("graph6 multi-byte orders are not supported (cap is " +
                     std::to_string(kMaxVertices) + ")");

  const int n = text.front() - kOffset;
  if (n > kMaxVertices)
    throw GraphError("graph6 order " + std::to_string(n) + " exceeds vertex cap");
  const int bits = pair_count(n);
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw GraphError("graph6 length mismatch: expected " + std::to_string(expected) +
                     " bytes for order " + std::to_string(n) + ", got " +
                     std::to_string(text.size()));

  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[1 + k / 6] - kOffset;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = text.back() - kOffset;
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw GraphError("graph6 padding bits are not zero");
  }
  return g;
}

}  // namespace exa
