#include "doctest.h"

#include "maxla/arrangement.hpp"
#include "maxla/free_tree.hpp"
#include "maxla/oracle.hpp"
#include "maxla/solvers.hpp"
#include "maxla/treegen.hpp"

#include <string>

using namespace maxla;

namespace {

graph two_hub_graph() {
    return graph(7, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
}

} // namespace

TEST_CASE("exhaustive sweep on a path") {
    auto r = brute_maxla(graph::path(4));
    CHECK(r.value == 7);
    CHECK(r.has_bipartite_maximum);
    CHECK_FALSE(r.has_nonbipartite_maximum);
    CHECK(r.min_thistles == 0);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(cost(graph::path(4), r.witnesses.front()) == 7);
}

TEST_CASE("exhaustive sweep on the smallest nonbipartite-only tree") {
    auto g = two_hub_graph();
    auto r = brute_maxla(g);
    CHECK(r.value == 24);
    CHECK_FALSE(r.has_bipartite_maximum);
    CHECK(r.has_nonbipartite_maximum);
    CHECK(r.min_thistles == 1);
    CHECK(r.one_thistle_maximum);
    CHECK(r.maxima_count == 4);
    for (const auto& w : r.witnesses)
        CHECK(cost(g, w) == 24);
}

TEST_CASE("mirror halving changes the count, not the answer") {
    oracle_options full;
    full.halve_by_mirror = false;
    for (const graph& g : {graph::path(5), graph::star(5), two_hub_graph()}) {
        auto halved = brute_maxla(g);
        auto swept = brute_maxla(g, full);
        CHECK(halved.value == swept.value);
        CHECK(halved.has_bipartite_maximum == swept.has_bipartite_maximum);
        CHECK(halved.has_nonbipartite_maximum == swept.has_nonbipartite_maximum);
        CHECK(halved.min_thistles == swept.min_thistles);
        CHECK(halved.one_thistle_maximum == swept.one_thistle_maximum);
        CHECK(swept.maxima_count == 2 * halved.maxima_count);
    }
}

TEST_CASE("restricted sweeps") {
    auto g = two_hub_graph();

    SUBCASE("bipartite restriction agrees with the constructive solver") {
        for (int n = 2; n <= 7; ++n) {
            enumerate_free_trees(n, [&](const free_tree& t) {
                auto ref = brute_restricted(t.g(), bipartite_only());
                REQUIRE(ref.has_value());
                CHECK(ref->value == bipartite_maxla(t).value);
                CHECK(ref->has_bipartite_maximum);
                CHECK_FALSE(ref->has_nonbipartite_maximum);
            });
        }
    }
    SUBCASE("zero thistles means bipartite") {
        auto a = brute_restricted(g, exactly_k_thistles(0));
        auto b = brute_restricted(g, bipartite_only());
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->value == b->value);
        CHECK(a->maxima_count == b->maxima_count);
        CHECK(a->value == 23);
    }
    SUBCASE("pinning the thistle set") {
        auto mid = brute_restricted(g, thistle_set_is({3}));
        REQUIRE(mid.has_value());
        CHECK(mid->value == 24);
        auto leaf = brute_restricted(g, thistle_set_is({0}));
        CHECK_FALSE(leaf.has_value());
    }
    SUBCASE("infeasible predicate yields nullopt") {
        auto none = brute_restricted(g, [](const graph&, const arrangement&) {
            return false;
        });
        CHECK_FALSE(none.has_value());
    }
}

TEST_CASE("maximizability classification") {
    auto two = classify_maximizability(two_hub_graph());
    CHECK(two.kind == maximizability::nonbipartite_only);
    CHECK(two.min_thistles == 1);
    CHECK(two.one_thistle_solves);

    auto path = classify_maximizability(graph::path(7));
    CHECK(path.kind == maximizability::bipartite_only);
    CHECK(path.min_thistles == 0);

    CHECK(maximizability_name(maximizability::bipartite_only) == std::string("bipartite-only"));
    CHECK(maximizability_name(maximizability::both) == std::string("both"));
    CHECK(maximizability_name(maximizability::nonbipartite_only) ==
          std::string("nonbipartite-only"));
}

TEST_CASE("exactly one 9-vertex tree is maximizable both ways") {
    int both = 0;
    enumerate_free_trees(9, [&](const free_tree& t) {
        if (classify_maximizability(t.g()).kind == maximizability::both)
            ++both;
    });
    CHECK(both == 1);
}

TEST_CASE("witness cap bounds storage only") {
    oracle_options capped;
    capped.witness_cap = 2;
    auto full = brute_maxla(two_hub_graph());
    auto r = brute_maxla(two_hub_graph(), capped);
    CHECK(r.witnesses.size() <= 2);
    CHECK(r.value == full.value);
    CHECK(r.maxima_count == full.maxima_count);
    CHECK(r.min_thistles == full.min_thistles);
}

TEST_CASE("empty graph is rejected") {
    CHECK_THROWS_AS(brute_maxla(graph(0, {})), std::invalid_argument);
}
