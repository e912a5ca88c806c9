#include "fullhom/fullhom.hpp"

#include <algorithm>
#include <stdexcept>

#include "fullhom/pd_core.hpp"
#include "fullhom/subgraph.hpp"

namespace fullhom {

bool verify_full_hom(const Graph& g, const Graph& h, std::span<const int> assignment) {
    if (assignment.size() != static_cast<std::size_t>(g.order())) return false;
    for (int v : assignment)
        if (v < 0 || v >= h.order()) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            const int a = assignment[static_cast<std::size_t>(u)];
            const int b = assignment[static_cast<std::size_t>(v)];
            const bool image_edge = a != b && h.has_edge(a, b);
            if (g.has_edge(u, v) != image_edge) return false;
        }
    return true;
}

std::optional<FullHomWitness> full_hom_witness(const Graph& g, const Graph& h) {
    const CoreResult cr = full_core(g);
    const auto embedding = find_induced_embedding(cr.core, h);
    if (!embedding) return std::nullopt;
    FullHomWitness w;
    w.assignment.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        w.assignment.push_back(
            (*embedding)[static_cast<std::size_t>(cr.map.assignment[static_cast<std::size_t>(v)])]);
    if (!verify_full_hom(g, h, w.assignment))
        throw std::logic_error("constructed full-homomorphism failed verification");
    return w;
}

bool full_hom_exists(const Graph& g, const Graph& h) {
    const CoreResult cr = full_core(g);
    return find_induced_embedding(cr.core, h).has_value();
}

bool full_hom_brute(const Graph& g, const Graph& h) {
    const int n = g.order(), k = h.order();
    if (n > 7 || k > 6)
        throw std::domain_error("full_hom_brute supports |V(g)| <= 7 and |V(h)| <= 6");
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) {
                const int a = assign[static_cast<std::size_t>(u)];
                const int b = assign[static_cast<std::size_t>(v)];
                const bool image_edge = a != b && h.has_edge(a, b);
                if (g.has_edge(u, v) != image_edge) ok = false;
            }
        if (ok) return true;
        int i = n - 1;
        while (i >= 0 && assign[static_cast<std::size_t>(i)] == k - 1)
            assign[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return false;
        ++assign[static_cast<std::size_t>(i)];
    }
}

BlowupCheck is_blowup_of_linear_forest(const Graph& g) {
    BlowupCheck out;
    const CoreResult cr = full_core(g);
    if (linear_forest_spec(cr.core)) {
        out.is_blowup = true;
        return out;
    }
    // Diagnostic: smallest forbidden induced subgraph, cycles first.
    std::vector<Graph> patterns;
    patterns.push_back(cycle_graph(3));
    for (int m = 5; m <= g.order(); ++m) patterns.push_back(cycle_graph(m));
    if (g.order() >= 6) {
        patterns.push_back(make_named(NamedGraph::A));
        patterns.push_back(make_named(NamedGraph::B));
        patterns.push_back(make_named(NamedGraph::E));
    }
    std::stable_sort(patterns.begin(), patterns.end(),
                     [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
    for (const Graph& p : patterns)
        if (contains_induced(g, p)) {
            out.obstruction = p;
            return out;
        }
    throw std::logic_error("non-forest core but no forbidden induced subgraph found");
}

}  // namespace fullhom
