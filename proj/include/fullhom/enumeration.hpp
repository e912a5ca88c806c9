#ifndef FULLHOM_ENUMERATION_HPP
#define FULLHOM_ENUMERATION_HPP

#include <functional>
#include <string>
#include <vector>

#include "fullhom/graph.hpp"

namespace fullhom {

enum class GraphFilter { all, point_determining, connected, connected_regular };

struct EnumerationRequest {
    int max_order = 1;            // 1..10 supported, 11 behind allow_best_effort
    GraphFilter filter = GraphFilter::all;
    bool allow_best_effort = false;
    int workers = 0;              // 0 = hardware concurrency
};

bool passes_filter(const Graph& g, GraphFilter filter);

// Calls `visit` with exactly one representative per isomorphism class of
// each order 1..max_order satisfying the filter.  Labels and call order
// are unspecified, and the visitor may run concurrently on worker threads;
// the set of visited classes is deterministic.  Generation is by canonical
// augmentation: a child is kept iff its new vertex lies in the orbit of
// the canonically chosen deletion vertex, so no global dedupe table is
// needed and memory stays flat.
void enumerate_visit(const EnumerationRequest& req,
                     const std::function<void(const Graph&)>& visit);

// Canonical representatives sorted by (order, canonical key).  Materializes
// everything; meant for max_order <= 9 (the order-10 stream has ~12M
// classes — use enumerate_visit or enumerate_graph6 for that).
std::vector<Graph> enumerate_collect(const EnumerationRequest& req);

// graph6 lines of the canonical representatives, sorted; line order equals
// (order, canonical key) order.
std::vector<std::string> enumerate_graph6(const EnumerationRequest& req);

// Connected k-regular classes for every k, each exactly once.
std::vector<Graph> enumerate_regular_connected(int max_order, int workers = 0);

}  // namespace fullhom

#endif
