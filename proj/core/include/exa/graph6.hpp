#pragma once

#include <string>
#include <string_view>

#include "exa/graph.hpp"

namespace exa {

// graph6 interchange format: N(n) followed by the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),..., packed six
// bits per byte, big-endian, each byte offset by 63. Orders here never exceed
// 62, so N(n) is a single byte.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws
// GraphError on characters outside 63..126, a length that disagrees with the
// order, nonzero padding bits or an order above kMaxVertices.
Graph decode_graph6(std::string_view text);

}  // namespace exa
