#include "wienerlab/graph6.hpp"

namespace wienerlab {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph decode_graph6(const std::string& line) {
  if (line.empty()) throw Graph6Error("empty graph6 line");
  for (char c : line)
    if (c < 63 || c > 126)
      throw Graph6Error("byte outside graph6 range 63..126");
  const int n = static_cast<int>(static_cast<unsigned char>(line[0])) - 63;
  if (n < 1 || n > kMaxOrder)
    throw Graph6Error("unsupported graph6 order (need 1..62)");
  const int tri = n * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((tri + 5) / 6);
  if (line.size() != expected) throw Graph6Error("bad graph6 length");
  Graph g(n);
  int bit_index = 0;
  int col = 1, row = 0;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const int group = static_cast<int>(static_cast<unsigned char>(line[i])) - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const int bit = (group >> b) & 1;
      if (bit_index < tri) {
        if (bit) g.add_edge(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (bit) {
        throw Graph6Error("nonzero graph6 padding bits");
      }
    }
  }
  return g;
}

}  // namespace wienerlab
