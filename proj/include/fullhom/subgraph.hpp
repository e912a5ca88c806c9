#ifndef FULLHOM_SUBGRAPH_HPP
#define FULLHOM_SUBGRAPH_HPP

#include <optional>
#include <vector>

#include "fullhom/graph.hpp"

namespace fullhom {

// First (in lexicographic backtracking order) injective map of pattern
// vertices 0,1,... onto host vertices inducing exactly the pattern:
// mapped pairs are adjacent in the host iff adjacent in the pattern.
std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern,
                                                       const Graph& host);

// True iff some vertex subset of g induces a graph isomorphic to pattern.
bool contains_induced(const Graph& g, const Graph& pattern);

}  // namespace fullhom

#endif
