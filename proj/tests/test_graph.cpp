#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "subpath/graph.hpp"

using namespace subpath;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("graph construction and queries") {
    Graph g(4, {{0, 1}, {2, 1}, {0, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 1));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    // edges come back sorted with first < second
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(Graph(-1, {}), input_error);
}

TEST_CASE("builders") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK_THROWS_AS(cycle_graph(2), input_error);
    CHECK_THROWS_AS(complete_graph(0), input_error);

    Graph g = add_edge(path_graph(3), 0, 2);
    CHECK(g.edge_count() == 3);
    CHECK_THROWS_AS(add_edge(g, 0, 2), input_error);
    CHECK_THROWS_AS(add_edge(g, 1, 1), input_error);
    Graph h = remove_edge(g, 0, 2);
    CHECK(h.edge_count() == 2);
    CHECK_FALSE(h.has_edge(0, 2));
    CHECK_THROWS_AS(remove_edge(h, 0, 2), input_error);
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("# comment\n0 1\n\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    // n= directive allows isolated trailing vertices
    Graph h = parse_edge_list("n=5\n0 1\n");
    CHECK(h.vertex_count() == 5);
    CHECK(h.edge_count() == 1);

    // windows line endings
    CHECK(parse_edge_list("0 1\r\n1 2\r\n").edge_count() == 2);

    // errors carry 1-based line numbers
    CHECK_THROWS_WITH(parse_edge_list("0 1\n2 2\n"), ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_edge_list("0 1\n0 1\n"),
                      ContainsSubstring("duplicate edge"));
    CHECK_THROWS_WITH(parse_edge_list("0 1 5\n"), ContainsSubstring("malformed"));
    CHECK_THROWS_WITH(parse_edge_list("0 -1\n"), ContainsSubstring("negative"));
    CHECK_THROWS_WITH(parse_edge_list("n=2\n0 5\n"), ContainsSubstring("declared n"));
    CHECK_THROWS_WITH(parse_edge_list("n=x\n"), ContainsSubstring("bad n="));
    CHECK_THROWS_WITH(parse_edge_list("0 1\nn=5\n"), ContainsSubstring("malformed"));
}

TEST_CASE("edge list round trip") {
    Graph g(4, {{0, 1}, {1, 2}, {0, 3}});
    Graph h = parse_edge_list(format_edge_list(g));
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("graph6 frozen encodings") {
    // reference strings produced by an independent encoder
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(encode_graph6(star) == "Ds_");
    CHECK(encode_graph6(cycle_graph(4)) == "Cl");
    CHECK(encode_graph6(complete_graph(4)) == "C~");
    CHECK(encode_graph6(complete_bipartite_graph(2, 3)) == "D]o");
    CHECK(encode_graph6(Graph(0, {})) == "?");
    CHECK(encode_graph6(Graph(1, {})) == "@");

    Graph s2 = parse_graph6("Ds_");
    CHECK(s2.vertex_count() == 5);
    CHECK(s2.degree(0) == 4);
    CHECK(s2.edge_count() == 4);
}

TEST_CASE("graph6 round trips") {
    for (const Graph& g :
         {path_graph(1), path_graph(7), cycle_graph(5), complete_graph(8),
          complete_bipartite_graph(3, 4), Graph(6, {}), path_graph(70)}) {
        Graph back = parse_graph6(encode_graph6(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
    // the 63..258047 header form
    CHECK(encode_graph6(path_graph(70)).substr(0, 2) == "~?");
    CHECK(parse_graph6(encode_graph6(path_graph(70))).vertex_count() == 70);
}

TEST_CASE("graph6 accepts the optional header") {
    Graph g = parse_graph6(">>graph6<<Cl");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), input_error);
    CHECK_THROWS_AS(parse_graph6("C"), input_error);       // truncated bits
    CHECK_THROWS_AS(parse_graph6("Cl?"), input_error);     // trailing garbage
    CHECK_THROWS_AS(parse_graph6("C\x07"), input_error);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("~"), input_error);       // truncated header
}

TEST_CASE("stats on a known graph") {
    // triangle with a pendant vertex
    Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    GraphStats st = stats(g);
    CHECK(st.n == 4);
    CHECK(st.m == 4);
    CHECK(st.degree_sequence == std::vector<int>{1, 2, 2, 3});
    CHECK(st.m1 == 1 + 4 + 4 + 9);
    // edges and their degree products: 01:4, 02:6, 12:6, 23:3
    CHECK(st.m2 == 19);
    CHECK(st.triangles == 1);
    CHECK(st.connected);
    CHECK_FALSE(st.bipartition.has_value());
    CHECK(st.odd_cycle.size() == 3);

    GraphStats k4 = stats(complete_graph(4));
    CHECK(k4.triangles == 4);
    CHECK(k4.m2 == 6 * 9);

    GraphStats even = stats(cycle_graph(6));
    REQUIRE(even.bipartition.has_value());
    CHECK(even.bipartition->first.size() == 3);
    CHECK(even.odd_cycle.empty());

    GraphStats two(stats(Graph(5, {{0, 1}, {2, 3}})));
    CHECK_FALSE(two.connected);
    GraphStats lone = stats(Graph(1, {}));
    CHECK(lone.connected);
    CHECK(lone.bipartition.has_value());

    // disconnected and odd: connectivity still reported correctly
    Graph tri2(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    GraphStats t2 = stats(tri2);
    CHECK_FALSE(t2.connected);
    CHECK_FALSE(t2.bipartition.has_value());
    CHECK(t2.triangles == 2);
}
