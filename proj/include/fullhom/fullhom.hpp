#ifndef FULLHOM_FULLHOM_HPP
#define FULLHOM_FULLHOM_HPP

#include <optional>
#include <span>
#include <vector>

#include "fullhom/graph.hpp"

namespace fullhom {

// assignment[v] in V(H); u,v distinct in G are adjacent iff their images
// are adjacent (so adjacent vertices land on distinct vertices).
struct FullHomWitness {
    std::vector<int> assignment;
};

bool verify_full_hom(const Graph& g, const Graph& h, std::span<const int> assignment);

// Decision through the full-core: collapse g, embed the core into h as an
// induced subgraph, compose with the collapse map.  The witness is checked
// before it is returned.
std::optional<FullHomWitness> full_hom_witness(const Graph& g, const Graph& h);
bool full_hom_exists(const Graph& g, const Graph& h);

// Independent oracle: tries all |V(h)|^|V(g)| assignments.  Guarded to
// |V(g)| <= 7 and |V(h)| <= 6.
bool full_hom_brute(const Graph& g, const Graph& h);

struct BlowupCheck {
    bool is_blowup = false;
    std::optional<Graph> obstruction;  // offending induced subgraph when false
};

// A graph is a blow-up of a linear forest iff its full-core is one.
BlowupCheck is_blowup_of_linear_forest(const Graph& g);

}  // namespace fullhom

#endif
