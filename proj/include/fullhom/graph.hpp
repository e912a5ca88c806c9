#ifndef FULLHOM_GRAPH_HPP
#define FULLHOM_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "fullhom/errors.hpp"

namespace fullhom {

inline constexpr int kMaxOrder = 32;

// Loopless simple graph on 1..32 vertices.  One adjacency bit row per
// vertex; rows at indices >= order() are kept zero so whole-array
// comparisons are label-wise graph comparisons.
class Graph {
public:
    explicit Graph(int order) : n_(order) {
        if (order < 1)
            throw std::domain_error("graph order must be at least 1");
        if (order > kMaxOrder)
            throw capacity_error("graph order exceeds capacity of 32");
    }

    static Graph from_edges(int order,
                            std::initializer_list<std::pair<int, int>> edges) {
        Graph g(order);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const noexcept { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::domain_error("loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }

    // Open neighbourhood N(v) as a bit mask.
    std::uint32_t neighbourhood(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // Closed neighbourhood N[v].
    std::uint32_t closed_neighbourhood(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)] | (std::uint32_t{1} << v);
    }

    int degree(int v) const { return std::popcount(neighbourhood(v)); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d = std::max(d, std::popcount(adj_[static_cast<std::size_t>(v)]));
        return d;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    std::uint32_t vertex_mask() const {
        return n_ == kMaxOrder ? ~std::uint32_t{0}
                               : (std::uint32_t{1} << n_) - 1;
    }

    // Raw rows for hot paths; valid for indices [0, order()).
    const std::uint32_t* rows() const noexcept { return adj_.data(); }
    std::uint32_t row(int v) const { return neighbourhood(v); }

    // Copy of this graph with one extra vertex adjacent to `neighbours`.
    Graph with_vertex(std::uint32_t neighbours) const {
        if (n_ >= kMaxOrder)
            throw capacity_error("graph order exceeds capacity of 32");
        Graph g(n_ + 1);
        g.adj_ = adj_;
        neighbours &= vertex_mask();
        g.adj_[static_cast<std::size_t>(n_)] = neighbours;
        while (neighbours) {
            const int v = std::countr_zero(neighbours);
            neighbours &= neighbours - 1;
            g.adj_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << n_;
        }
        return g;
    }

    bool operator==(const Graph&) const = default;
    auto operator<=>(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    int n_;
    std::array<std::uint32_t, kMaxOrder> adj_{};
};

enum class StandardKind { path, cycle, complete, empty };

Graph make_standard(StandardKind kind, int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

// The three six-vertex graphs used throughout: A is the path
// v0..v5 plus the chord v1v4, B is A plus the edge v0v5, and E is the
// tree with edges v0v1, v1v2, v0v5, v1v4, v2v3.
enum class NamedGraph { A, B, E };
Graph make_named(NamedGraph which);

Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

Graph delete_vertex(const Graph& g, int v);

// Induced subgraph on the vertices of `vertex_set`, labels compacted
// preserving relative order.  The set must be nonempty.
Graph induced_subgraph(const Graph& g, std::uint32_t vertex_set);

// Maximal connected vertex sets, ordered by least vertex.
std::vector<std::uint32_t> connected_components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g);

}  // namespace fullhom

#endif
