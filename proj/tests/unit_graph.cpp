#include "doctest.h"

#include "maxla/graph.hpp"

#include <sstream>

using namespace maxla;

TEST_CASE("constructor validates edges") {
    CHECK_THROWS_AS(graph(2, {{0, 0}}), std::invalid_argument);       // self loop
    CHECK_THROWS_AS(graph(2, {{0, 1}, {1, 0}}), std::invalid_argument); // duplicate
    CHECK_THROWS_AS(graph(2, {{0, 2}}), std::invalid_argument);       // out of range
    CHECK_THROWS_AS(graph(-1, {}), std::invalid_argument);
}

TEST_CASE("adjacency is sorted and queryable") {
    graph g(5, {{3, 0}, {0, 1}, {0, 4}, {1, 2}});
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 4);
    CHECK(g.neighbors(0) == std::vector<int>{1, 3, 4});
    CHECK(g.degree(0) == 3);
    CHECK(g.max_degree() == 3);
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(3, 4));
    // Edges are normalized (u < v) and sorted.
    CHECK(g.edges().front() == std::pair<int, int>{0, 1});
    CHECK(g.edges().back() == std::pair<int, int>{1, 2});
}

TEST_CASE("is_connected and is_tree") {
    CHECK(graph::path(4).is_tree());
    CHECK(graph::cycle(4).is_connected());
    CHECK_FALSE(graph::cycle(4).is_tree());
    graph forest(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(forest.is_connected());
    CHECK_FALSE(forest.is_tree());
    CHECK(graph(1, {}).is_tree());
    CHECK_FALSE(graph(0, {}).is_connected());
}

TEST_CASE("generators have the expected shape") {
    auto p = graph::path(5);
    CHECK(p.num_edges() == 4);
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(2) == 2);

    auto c = graph::cycle(5);
    CHECK(c.num_edges() == 5);
    for (int u = 0; u < 5; ++u)
        CHECK(c.degree(u) == 2);
    CHECK_THROWS_AS(graph::cycle(2), std::invalid_argument);

    auto s = graph::star(6);
    CHECK(s.degree(0) == 5);
    CHECK(s.max_degree() == 5);

    auto b = graph::bistar(4, 3);
    CHECK(b.num_vertices() == 7);
    CHECK(b.degree(0) == 4);
    CHECK(b.degree(1) == 3);
    CHECK(b.has_edge(0, 1));
    CHECK_THROWS_AS(graph::bistar(0, 3), std::invalid_argument);

    auto q = graph::quasistar(2, 1);
    CHECK(q.num_vertices() == 6);
    CHECK(q.degree(0) == 3);
    CHECK(q.is_tree());

    auto sp = graph::spider({3, 2, 2});
    CHECK(sp.num_vertices() == 8);
    CHECK(sp.degree(0) == 3);
    CHECK(sp.is_tree());
    CHECK_THROWS_AS(graph::spider({0}), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    auto g = parse_edge_list("0 1\n1 2\n\n2 3\n");
    CHECK(g.is_tree());
    CHECK(g.num_vertices() == 4);

    SUBCASE("declared vertex count allows isolated vertices") {
        auto h = parse_edge_list("n 5\n0 1\n");
        CHECK(h.num_vertices() == 5);
        CHECK(h.num_edges() == 1);
    }
    SUBCASE("labels resolve to indices") {
        auto h = parse_edge_list("# label a 0\n# label b 1\na b\nb 2\n");
        CHECK(h.num_vertices() == 3);
        CHECK(h.has_edge(0, 1));
        CHECK(h.has_edge(1, 2));
    }
    SUBCASE("comments are skipped") {
        auto h = parse_edge_list("# just a note\n0 1\n");
        CHECK(h.num_edges() == 1);
    }
    SUBCASE("errors carry line numbers") {
        try {
            parse_edge_list("0 1\n0 x\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 2);
        }
        CHECK_THROWS_AS(parse_edge_list("0\n"), parse_error);
        CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), parse_error);
        CHECK_THROWS_AS(parse_edge_list("0 0\n"), parse_error);          // self loop
        CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), parse_error);     // over count
        CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), parse_error);     // duplicate
    }
}

TEST_CASE("format and parse round trip") {
    auto g = graph::bistar(3, 3);
    auto again = parse_edge_list(format_edge_list(g));
    CHECK(again.num_vertices() == g.num_vertices());
    CHECK(again.edges() == g.edges());
}

TEST_CASE("bipartition") {
    bipartition b;
    CHECK(try_bipartition(graph::path(4), b));
    CHECK(b.count[0] == 2);
    CHECK(b.count[1] == 2);
    CHECK(b.color[0] != b.color[1]);

    CHECK(try_bipartition(graph::star(5), b));
    CHECK(b.count[0] + b.count[1] == 5);
    CHECK((b.count[0] == 1 || b.count[1] == 1));

    CHECK(try_bipartition(graph::cycle(4), b));
    CHECK_FALSE(try_bipartition(graph::cycle(5), b));
}
