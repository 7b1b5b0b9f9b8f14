#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "wienerlab/graph.hpp"

namespace wienerlab {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Short-form graph6: byte n+63, then the upper-triangle bits in column
// order (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups,
// zero padded, each group offset by 63.
std::string encode_graph6(const Graph& g);

// Throws Graph6Error on bad length, bytes outside 63..126 or nonzero
// padding bits.
Graph decode_graph6(const std::string& line);

// Reads newline-delimited graph6 from `in`, calling fn(line_no, line) per
// non-empty line. The optional ">>graph6<<" header is skipped.
template <class Fn>
void for_each_graph6_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    fn(line_no, line);
  }
}

}  // namespace wienerlab
