#include "fullhom/graph.hpp"

#include <stdexcept>

namespace fullhom {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::domain_error("a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph make_standard(StandardKind kind, int n) {
    switch (kind) {
        case StandardKind::path: return path_graph(n);
        case StandardKind::cycle: return cycle_graph(n);
        case StandardKind::complete: return complete_graph(n);
        case StandardKind::empty: return empty_graph(n);
    }
    throw std::invalid_argument("unknown standard graph kind");
}

Graph make_named(NamedGraph which) {
    switch (which) {
        case NamedGraph::A:
            return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}});
        case NamedGraph::B:
            return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {0, 5}});
        case NamedGraph::E:
            return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 5}, {1, 4}, {2, 3}});
    }
    throw std::invalid_argument("unknown named graph");
}

Graph disjoint_union(std::span<const Graph> parts) {
    if (parts.empty()) throw std::domain_error("disjoint union of nothing");
    int total = 0;
    for (const Graph& p : parts) total += p.order();
    if (total > kMaxOrder)
        throw capacity_error("disjoint union exceeds capacity of 32");
    Graph g(total);
    int base = 0;
    for (const Graph& p : parts) {
        for (int u = 0; u < p.order(); ++u)
            for (int v = u + 1; v < p.order(); ++v)
                if (p.has_edge(u, v)) g.add_edge(base + u, base + v);
        base += p.order();
    }
    return g;
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
    return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph induced_subgraph(const Graph& g, std::uint32_t vertex_set) {
    vertex_set &= g.vertex_mask();
    int m = std::popcount(vertex_set);
    if (m == 0)
        throw std::domain_error("induced subgraph on the empty vertex set");
    // new_label[v] = rank of v within the set
    std::array<int, kMaxOrder> new_label{};
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((vertex_set >> v) & 1u) new_label[static_cast<std::size_t>(v)] = next++;
    Graph out(m);
    for (int u = 0; u < g.order(); ++u) {
        if (!((vertex_set >> u) & 1u)) continue;
        std::uint32_t nb = g.neighbourhood(u) & vertex_set;
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (v > u)
                out.add_edge(new_label[static_cast<std::size_t>(u)],
                             new_label[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex index out of range");
    if (g.order() == 1)
        throw std::domain_error("deleting the last vertex leaves an empty graph");
    return induced_subgraph(g, g.vertex_mask() & ~(std::uint32_t{1} << v));
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
    std::vector<std::uint32_t> comps;
    std::uint32_t remaining = g.vertex_mask();
    while (remaining) {
        std::uint32_t comp = std::uint32_t{1} << std::countr_zero(remaining);
        for (;;) {
            std::uint32_t grown = comp;
            std::uint32_t frontier = comp;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grown |= g.neighbourhood(v);
            }
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        remaining &= ~comp;
    }
    return comps;
}

int component_count(const Graph& g) {
    return static_cast<int>(connected_components(g).size());
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_regular(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

}  // namespace fullhom
