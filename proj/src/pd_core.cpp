#include "fullhom/pd_core.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace fullhom {

std::vector<std::pair<int, int>> false_twins(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbourhood(u) == g.neighbourhood(v)) pairs.emplace_back(u, v);
    return pairs;
}

std::vector<std::pair<int, int>> true_twins(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.closed_neighbourhood(u) == g.closed_neighbourhood(v))
                pairs.emplace_back(u, v);
    return pairs;
}

bool is_point_determining(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbourhood(u) == g.neighbourhood(v)) return false;
    return true;
}

CoreResult full_core(const Graph& g) {
    Graph core = g;
    std::vector<int> assignment(static_cast<std::size_t>(g.order()));
    std::iota(assignment.begin(), assignment.end(), 0);

    for (;;) {
        // least false-twin pair of the current graph
        int mu = -1, mv = -1;
        for (int u = 0; u < core.order() && mu < 0; ++u)
            for (int v = u + 1; v < core.order(); ++v)
                if (core.neighbourhood(u) == core.neighbourhood(v)) {
                    mu = u;
                    mv = v;
                    break;
                }
        if (mu < 0) break;
        core = delete_vertex(core, mv);
        for (int& a : assignment) {
            if (a == mv)
                a = mu;
            else if (a > mv)
                --a;
        }
    }
    return CoreResult{core, CollapseMap{g.order(), std::move(assignment)}};
}

std::uint32_t removable_vertices(const Graph& g) {
    if (!is_point_determining(g))
        throw std::domain_error("removable_vertices requires a point-determining graph");
    std::uint32_t out = 0;
    if (g.order() == 1) return out;
    for (int v = 0; v < g.order(); ++v)
        if (is_point_determining(delete_vertex(g, v))) out |= std::uint32_t{1} << v;
    return out;
}

namespace {

bool component_is_path(const Graph& g, std::uint32_t comp) {
    const int size = std::popcount(comp);
    if (size == 1) return true;
    int edges2 = 0;
    for (std::uint32_t m = comp; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        const int d = std::popcount(g.neighbourhood(v) & comp);
        if (d > 2) return false;
        edges2 += d;
    }
    // connected with max degree two: path iff size-1 edges (no cycle)
    return edges2 / 2 == size - 1;
}

}  // namespace

std::optional<std::uint32_t> find_non_path_component(const Graph& g) {
    for (std::uint32_t comp : connected_components(g))
        if (!component_is_path(g, comp)) return comp;
    return std::nullopt;
}

std::optional<LinearForestSpec> linear_forest_spec(const Graph& g) {
    LinearForestSpec spec;
    for (std::uint32_t comp : connected_components(g)) {
        if (!component_is_path(g, comp)) return std::nullopt;
        ++spec.multiplicities[std::popcount(comp)];
    }
    return spec;
}

int LinearForestSpec::total_order() const {
    int total = 0;
    for (auto [size, count] : multiplicities) total += size * count;
    return total;
}

int LinearForestSpec::component_count() const {
    int total = 0;
    for (auto [size, count] : multiplicities) total += count;
    return total;
}

Graph realize(const LinearForestSpec& spec) {
    std::vector<Graph> parts;
    for (auto [size, count] : spec.multiplicities) {
        if (size < 1 || count < 0)
            throw std::domain_error("invalid linear forest multiplicities");
        for (int i = 0; i < count; ++i) parts.push_back(path_graph(size));
    }
    return disjoint_union(parts);
}

int mu(const LinearForestSpec& spec) {
    return spec.total_order() + spec.component_count() - 1;
}

}  // namespace fullhom
