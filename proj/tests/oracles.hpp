// Brute-force test oracles, kept independent of the library's search and
// canonization paths.
#ifndef FULLHOM_TESTS_ORACLES_HPP
#define FULLHOM_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "fullhom/canonical.hpp"
#include "fullhom/graph.hpp"

namespace testor {

using fullhom::Graph;

// All 2^(n choose 2) labeled graphs on n vertices.
inline std::vector<Graph> all_labeled_graphs(int n) {
    const int nbits = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << nbits);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1u) g.add_edge(u, v);
        out.push_back(g);
    }
    return out;
}

inline bool is_automorphism(const Graph& g, const std::vector<int>& p) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v) != g.has_edge(p[std::size_t(u)], p[std::size_t(v)]))
                return false;
    return true;
}

// Isomorphism by trying all n! permutations.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    const int n = g.order();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(p[std::size_t(u)], p[std::size_t(v)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Least adjacency bit-string over all permutations, as a 0/1 text string
// in upper-triangle column-major order.
inline std::string brute_lexmin_bits(const Graph& g) {
    const int n = g.order();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string bits;
        bits.reserve(std::size_t(n * (n - 1) / 2));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g.has_edge(p[std::size_t(i)], p[std::size_t(j)]) ? '1' : '0');
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Orbit partition from all automorphisms.
inline std::vector<std::uint32_t> brute_orbits(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[std::size_t(v)] != v) v = parent[std::size_t(v)] = parent[std::size_t(parent[std::size_t(v)])];
        return v;
    };
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (!is_automorphism(g, p)) continue;
        for (int v = 0; v < n; ++v) {
            const int a = find(v), b = find(p[std::size_t(v)]);
            if (a != b) parent[std::size_t(std::max(a, b))] = std::min(a, b);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::uint32_t> orbits;
    for (int rep = 0; rep < n; ++rep) {
        if (find(rep) != rep) continue;
        std::uint32_t mask = 0;
        for (int v = 0; v < n; ++v)
            if (find(v) == rep) mask |= std::uint32_t{1} << v;
        orbits.push_back(mask);
    }
    return orbits;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Canonical bit-string of the library's canonical form, for comparing
// against brute_lexmin_bits.
inline std::string form_bits(const fullhom::CanonicalForm& f) {
    const int n = f.key[0];
    std::string bits;
    for (int b = 0; b < n * (n - 1) / 2; ++b)
        bits.push_back(((f.key[std::size_t(1 + b / 8)] >> (7 - b % 8)) & 1u) ? '1' : '0');
    return bits;
}

}  // namespace testor

#endif
