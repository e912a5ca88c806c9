#ifndef FULLHOM_GRAPH6_HPP
#define FULLHOM_GRAPH6_HPP

#include <string>
#include <string_view>

#include "fullhom/graph.hpp"

namespace fullhom {

// Standard graph6 text encoding: one order byte (63+n, n <= 62), then the
// upper-triangle adjacency bits column by column, six bits per printable
// character offset by 63.  Padding bits are zero.
std::string graph6_encode(const Graph& g);

// Strict decoder: rejects bad bytes, wrong length, nonzero padding and
// orders outside [1, 32].  Trailing \n or \r\n is tolerated.
Graph graph6_decode(std::string_view text);

}  // namespace fullhom

#endif
