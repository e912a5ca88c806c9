#ifndef FULLHOM_CANONICAL_HPP
#define FULLHOM_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fullhom/graph.hpp"

namespace fullhom {

// Isomorphism-invariant key: one order byte, then the lexicographically
// least adjacency bit-string of the graph over all vertex permutations
// (upper triangle, column by column, packed 8 bits per byte, zero padded).
// Two graphs have equal keys iff they are isomorphic.
struct CanonicalForm {
    std::array<std::uint8_t, 63> key{};

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;

    int order() const { return key[0]; }
    std::string hex() const;
};

// Everything the labeling search produces: the canonical representative,
// the labeling that realizes it, automorphism generators discovered along
// the way, and the vertex orbits they generate.
struct CanonicalData {
    int order = 0;
    std::array<std::uint32_t, kMaxOrder> canon_rows{};
    // labeling[pos] = original vertex placed at canonical position pos
    std::array<std::uint8_t, kMaxOrder> labeling{};
    // orbit[v] = least vertex in the automorphism orbit of v
    std::array<std::uint8_t, kMaxOrder> orbit{};
    std::vector<std::array<std::uint8_t, kMaxOrder>> generators;

    CanonicalForm form() const;
    Graph canonical_graph() const;
};

CanonicalData canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

// Orbits of the full automorphism group as vertex masks, ordered by least
// vertex.  Vertex-transitive means a single orbit.
std::vector<std::uint32_t> automorphism_orbits(const Graph& g);
bool is_vertex_transitive(const Graph& g);

}  // namespace fullhom

#endif
