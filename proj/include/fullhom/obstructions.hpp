#ifndef FULLHOM_OBSTRUCTIONS_HPP
#define FULLHOM_OBSTRUCTIONS_HPP

#include <span>
#include <vector>

#include "fullhom/canonical.hpp"
#include "fullhom/graph.hpp"

namespace fullhom {

// Canonical, key-sorted set of pairwise non-isomorphic graphs.
struct ObstructionSet {
    Graph host;
    std::vector<std::pair<CanonicalForm, Graph>> members;

    bool contains(const Graph& g) const;
    std::vector<CanonicalForm> keys() const;
    std::vector<Graph> graphs() const;
    bool same_members(const ObstructionSet& other) const;
};

// g is not full host-colourable but every one-vertex-deleted induced
// subgraph is (deletions suffice: colourability is hereditary).
bool is_minimal_obstruction(const Graph& g, const Graph& host);

struct OracleOptions {
    int workers = 0;
    // When nonempty, these classes replace the built-in enumerator as the
    // candidate universe (e.g. an externally generated catalog).
    std::span<const Graph> catalog = {};
};

// Ground truth by exhaustion: filters the point-determining stream up to
// order |V(host)|+1 through is_minimal_obstruction.
ObstructionSet obs_oracle(const Graph& host, const OracleOptions& opt = {});
// Only the members on exactly |V(host)|+1 vertices.
ObstructionSet obs_star_oracle(const Graph& host, const OracleOptions& opt = {});

// Checks obs(g) = (obs(h) \ {g}) ∪ obs*(g) for g in obs*(h), entirely by
// oracle; both sides' canonical keys are reported.
struct TransferReport {
    Graph host;
    Graph mid;
    std::vector<CanonicalForm> lhs;
    std::vector<CanonicalForm> rhs;
    bool holds = false;
};
TransferReport check_obs_transfer(const Graph& h, const Graph& g,
                                  const OracleOptions& opt = {});

// Disjoint union of the full-cores of all one-vertex-deleted subgraphs of
// a connected point-determining graph, in vertex order and without
// deduplication; the result is verified to admit g as a minimal
// obstruction before being returned.
Graph construct_witness_host(const Graph& g);

// For point-determining regular g: is there a host h one vertex smaller
// with g in obs*(h)?  Only the vertex-deleted subgraphs of g can qualify.
bool obs_star_existence_regular(const Graph& g);

}  // namespace fullhom

#endif
