#ifndef FULLHOM_PD_CORE_HPP
#define FULLHOM_PD_CORE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fullhom/graph.hpp"

namespace fullhom {

// All unordered pairs with equal open neighbourhoods (always non-adjacent).
std::vector<std::pair<int, int>> false_twins(const Graph& g);
// All unordered pairs with equal closed neighbourhoods (always adjacent).
std::vector<std::pair<int, int>> true_twins(const Graph& g);

bool is_point_determining(const Graph& g);

// Records which vertices were merged while collapsing to the core:
// assignment[v] is the core vertex the source vertex v maps onto.  The map
// is surjective and adjacency-reflecting.
struct CollapseMap {
    int source_order = 0;
    std::vector<int> assignment;
};

struct CoreResult {
    Graph core;
    CollapseMap map;
};

// Repeatedly merges the lexicographically least false-twin pair (keeping
// the lower-indexed vertex) until the graph is point-determining.
CoreResult full_core(const Graph& g);

// Vertices whose deletion leaves a point-determining graph; the input must
// itself be point-determining.
std::uint32_t removable_vertices(const Graph& g);

// Multiset of path-component sizes of a linear forest.
struct LinearForestSpec {
    std::map<int, int> multiplicities;  // size -> number of components

    int total_order() const;
    int component_count() const;
    bool operator==(const LinearForestSpec&) const = default;
};

// Recognizes disjoint unions of paths; nullopt if some component is not a
// path (see find_non_path_component for the diagnostic).
std::optional<LinearForestSpec> linear_forest_spec(const Graph& g);
std::optional<std::uint32_t> find_non_path_component(const Graph& g);

// Disjoint union of paths with the given multiplicities, smallest first.
Graph realize(const LinearForestSpec& spec);

// Least order of a path admitting an injective full-homomorphism from the
// forest: total order plus component count minus one.
int mu(const LinearForestSpec& spec);

}  // namespace fullhom

#endif
