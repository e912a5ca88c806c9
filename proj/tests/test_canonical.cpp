#include <map>
#include <set>
#include <random>

#include "doctest.h"
#include "fullhom/canonical.hpp"
#include "fullhom/enumeration.hpp"
#include "oracles.hpp"

using namespace fullhom;

namespace {

Graph random_graph(std::mt19937& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("key is the least adjacency bit-string over all permutations") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : testor::all_labeled_graphs(n))
            CHECK(testor::form_bits(canonical_form(g)) == testor::brute_lexmin_bits(g));

    std::mt19937 rng(7u);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(rng, 6 + int(trial % 2));
        CHECK(testor::form_bits(canonical_form(g)) == testor::brute_lexmin_bits(g));
    }
}

TEST_CASE("key equality is exactly isomorphism") {
    CHECK(is_isomorphic(cycle_graph(3), complete_graph(3)));
    CHECK_FALSE(is_isomorphic(make_named(NamedGraph::A), make_named(NamedGraph::B)));

    Graph p4_reversed(4);
    p4_reversed.add_edge(3, 2);
    p4_reversed.add_edge(2, 1);
    p4_reversed.add_edge(1, 0);
    CHECK(is_isomorphic(path_graph(4), p4_reversed));

    // all labeled graphs up to 5 vertices, grouped by key, cross-checked
    // against the all-permutations oracle
    for (int n = 2; n <= 5; ++n) {
        std::map<CanonicalForm, Graph> by_key;
        for (const Graph& g : testor::all_labeled_graphs(n)) {
            const CanonicalForm key = canonical_form(g);
            auto [it, inserted] = by_key.emplace(key, g);
            if (!inserted) CHECK(testor::brute_isomorphic(g, it->second));
        }
        std::vector<Graph> reps;
        for (const auto& [key, g] : by_key) reps.push_back(g);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(testor::brute_isomorphic(reps[i], reps[j]));
    }
}

TEST_CASE("canonical soundness over the small enumeration") {
    // distinct keys within the order-6 and order-7 streams really are
    // non-isomorphic; the all-permutations check is confirmed on every
    // pair the cheap invariants cannot separate
    EnumerationRequest req;
    req.max_order = 7;
    const std::vector<Graph> classes = enumerate_collect(req);
    std::map<std::pair<int, std::multiset<int>>, std::vector<Graph>> buckets;
    for (const Graph& g : classes) {
        std::multiset<int> degrees;
        for (int v = 0; v < g.order(); ++v) degrees.insert(g.degree(v));
        buckets[{g.order(), degrees}].push_back(g);
    }
    for (const auto& [sig, bucket] : buckets)
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j)
                CHECK_FALSE(testor::brute_isomorphic(bucket[i], bucket[j]));
}

TEST_CASE("keys are labelling independent") {
    std::mt19937 rng(99u);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + int(rng() % 7);
        const Graph g = random_graph(rng, n);
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v)) h.add_edge(p[std::size_t(u)], p[std::size_t(v)]);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("automorphism orbits match the all-permutations oracle") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : testor::all_labeled_graphs(n))
            CHECK(automorphism_orbits(g) == testor::brute_orbits(g));

    std::mt19937 rng(4242u);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = random_graph(rng, 6 + int(trial % 2));
        CHECK(automorphism_orbits(g) == testor::brute_orbits(g));
    }
}

TEST_CASE("orbit examples") {
    CHECK(automorphism_orbits(cycle_graph(5)) == std::vector<std::uint32_t>{0b11111u});
    CHECK(is_vertex_transitive(cycle_graph(5)));

    const auto p4_orbits = automorphism_orbits(path_graph(4));
    CHECK(p4_orbits == std::vector<std::uint32_t>{0b1001u, 0b0110u});
    CHECK_FALSE(is_vertex_transitive(path_graph(4)));

    const Graph k1_k2 = disjoint_union({Graph(1), complete_graph(2)});
    CHECK(automorphism_orbits(k1_k2) == std::vector<std::uint32_t>{0b001u, 0b110u});
    CHECK_FALSE(is_vertex_transitive(k1_k2));
}

TEST_CASE("generators verify as automorphisms") {
    std::mt19937 rng(555u);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 3 + int(rng() % 6));
        const CanonicalData data = canonicalize(g);
        for (const auto& p : data.generators) {
            std::vector<int> perm(p.begin(), p.begin() + g.order());
            CHECK(testor::is_automorphism(g, perm));
        }
    }
}

}  // TEST_SUITE
