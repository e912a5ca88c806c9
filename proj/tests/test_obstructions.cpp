#include "doctest.h"
#include "fullhom/canonical.hpp"
#include "fullhom/enumeration.hpp"
#include "fullhom/graph6.hpp"
#include "fullhom/obstructions.hpp"
#include "fullhom/pd_core.hpp"
#include "oracles.hpp"

using namespace fullhom;

namespace {

const Graph k1_k2 = disjoint_union({Graph(1), complete_graph(2)});

bool set_equals(const ObstructionSet& set, const std::vector<Graph>& expected) {
    if (set.members.size() != expected.size()) return false;
    for (const Graph& g : expected)
        if (!set.contains(g)) return false;
    return true;
}

}  // namespace

TEST_SUITE("obstructions") {

TEST_CASE("minimality examples") {
    const Graph a = make_named(NamedGraph::A);
    const Graph e = make_named(NamedGraph::E);
    CHECK(is_minimal_obstruction(a, path_graph(6)));
    CHECK_FALSE(is_minimal_obstruction(a, path_graph(5)));
    CHECK(is_minimal_obstruction(e, path_graph(7)));
    CHECK_FALSE(is_minimal_obstruction(e, path_graph(6)));
    for (int n = 3; n <= 8; ++n)
        CHECK_FALSE(is_minimal_obstruction(cycle_graph(4), path_graph(n)));
}

TEST_CASE("oracle on the smallest hosts") {
    const ObstructionSet k2 = obs_oracle(complete_graph(2));
    CHECK(set_equals(k2, {k1_k2, complete_graph(3)}));

    CHECK(obs_star_oracle(cycle_graph(5)).members.empty());

    const Graph two_k2 = disjoint_union({complete_graph(2), complete_graph(2)});
    const Graph k1_p4 = disjoint_union({Graph(1), path_graph(4)});
    const ObstructionSet c5 = obs_oracle(cycle_graph(5));
    CHECK(set_equals(c5, {cycle_graph(3), two_k2, k1_p4}));
}

TEST_CASE("oracle members are sorted, point-determining and small") {
    const ObstructionSet set = obs_oracle(path_graph(5));
    for (std::size_t i = 1; i < set.members.size(); ++i)
        CHECK(set.members[i - 1].first < set.members[i].first);
    for (const auto& [key, g] : set.members) {
        CHECK(is_point_determining(g));
        CHECK(g.order() <= set.host.order() + 1);
    }
}

TEST_CASE("catalog substitution gives the same sets") {
    EnumerationRequest req;
    req.max_order = 6;
    const std::vector<Graph> catalog = enumerate_collect(req);
    OracleOptions with_catalog;
    with_catalog.catalog = catalog;
    const ObstructionSet direct = obs_oracle(cycle_graph(5));
    const ObstructionSet via_catalog = obs_oracle(cycle_graph(5), with_catalog);
    CHECK(direct.same_members(via_catalog));
}

TEST_CASE("oracle is deterministic across worker counts") {
    OracleOptions one;
    one.workers = 1;
    OracleOptions four;
    four.workers = 4;
    CHECK(obs_oracle(path_graph(5), one).keys() == obs_oracle(path_graph(5), four).keys());
}

TEST_CASE("obstruction transfer identity") {
    // C_5 sits in obs*(P_4)
    const TransferReport r1 = check_obs_transfer(path_graph(4), cycle_graph(5));
    CHECK(r1.holds);

    const TransferReport r2 = check_obs_transfer(complete_graph(2), complete_graph(3));
    CHECK(r2.holds);
    const ObstructionSet k3 = obs_oracle(complete_graph(3));
    CHECK(set_equals(k3, {k1_k2, complete_graph(4)}));

    CHECK_THROWS_AS(check_obs_transfer(cycle_graph(5), cycle_graph(6)), std::domain_error);
}

TEST_CASE("witness host construction") {
    // both hosts are linear forests; compare component-size multisets
    const Graph p4_host = construct_witness_host(path_graph(4));
    CHECK(p4_host.order() == 10);
    const auto p4_spec = linear_forest_spec(p4_host);
    REQUIRE(p4_spec.has_value());
    CHECK(p4_spec->multiplicities == std::map<int, int>{{1, 2}, {2, 4}});

    const Graph k2_host = construct_witness_host(complete_graph(2));
    CHECK(k2_host == empty_graph(2));

    const Graph c5_host = construct_witness_host(cycle_graph(5));
    const auto c5_spec = linear_forest_spec(c5_host);
    REQUIRE(c5_spec.has_value());
    CHECK(c5_spec->multiplicities == std::map<int, int>{{4, 5}});

    CHECK_THROWS_AS(construct_witness_host(path_graph(3)), std::domain_error);
    CHECK_THROWS_AS(construct_witness_host(disjoint_union({Graph(1), complete_graph(2)})),
                    std::domain_error);
}

TEST_CASE("obs* existence for regular graphs tracks vertex transitivity") {
    CHECK(obs_star_existence_regular(cycle_graph(6)));
    CHECK(is_minimal_obstruction(cycle_graph(6), path_graph(5)));

    const Graph two_k2 = disjoint_union({complete_graph(2), complete_graph(2)});
    CHECK(obs_star_existence_regular(two_k2));
    CHECK(is_minimal_obstruction(two_k2, k1_k2));

    CHECK_THROWS_AS(obs_star_existence_regular(path_graph(3)), std::domain_error);

    // every point-determining regular graph up to order 8, connected or
    // not; there are at least 15 through order 7 alone (K_2; K_3; K_4,
    // 2K_2; K_5, C_5; K_6, C_6, prism, octahedron, 3K_2, 2K_3; K_7, C_7,
    // and the complement of C_7)
    EnumerationRequest req;
    req.max_order = 8;
    int checked = 0;
    for (const Graph& g : enumerate_collect(req)) {
        if (g.order() < 2 || !is_regular(g) || !is_point_determining(g)) continue;
        ++checked;
        CHECK(obs_star_existence_regular(g) == is_vertex_transitive(g));
    }
    CHECK(checked >= 15);
}

TEST_CASE("oracle rejects oversized hosts") {
    CHECK_THROWS_AS(obs_oracle(path_graph(10)), std::domain_error);
}

}  // TEST_SUITE
