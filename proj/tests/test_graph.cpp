#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "seidel/checks.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph_io.hpp"

using namespace seidel;

TEST_CASE("graph construction normalizes and validates") {
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(1, 1));

    CHECK_THROWS_AS(Graph(0, {}), invalid_parameter);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), invalid_parameter);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), invalid_parameter);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), invalid_parameter);
}

TEST_CASE("complete graphs") {
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(2).edges() == std::vector<Edge>{{0, 1}});
    const Graph k5 = complete_graph(5);
    CHECK(k5.edge_count() == 10);
    for (int d : k5.degrees()) CHECK(d == 4);
    CHECK_THROWS_AS(complete_graph(0), invalid_parameter);
}

TEST_CASE("complete bipartite graphs") {
    CHECK(complete_bipartite(1, 1) == complete_graph(2));
    const Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.order() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.degrees() == std::vector<int>{3, 3, 2, 2, 2});
    CHECK_FALSE(k23.adjacent(0, 1));
    CHECK(k23.adjacent(0, 2));
    CHECK(complete_bipartite(3, 3).edge_count() == 9);
    CHECK_THROWS_AS(complete_bipartite(0, 2), invalid_parameter);
}

TEST_CASE("paley graphs") {
    // Squares mod 5 are {1, 4}, so P_5 is the 5-cycle 0-1-2-3-4-0.
    const Graph p5 = paley_graph(5);
    CHECK(p5.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});

    const Graph p13 = paley_graph(13);
    CHECK(p13.order() == 13);
    for (int d : p13.degrees()) CHECK(d == 6);
    // Neighborhood of 0 = nonzero quadratic residues mod 13.
    std::vector<int> nbrs;
    for (int v = 1; v < 13; ++v)
        if (p13.adjacent(0, v)) nbrs.push_back(v);
    CHECK(nbrs == std::vector<int>{1, 3, 4, 9, 10, 12});

    CHECK_THROWS_AS(paley_graph(7), invalid_parameter);   // 7 = 3 (mod 4)
    CHECK_THROWS_AS(paley_graph(9), unsupported_field);   // prime power, not prime
    CHECK_THROWS_AS(paley_graph(15), unsupported_field);  // composite
}

TEST_CASE("drawn fixtures") {
    const Graph f = figure1_order6();
    CHECK(f.order() == 6);
    CHECK(f.edge_count() == 5);
    CHECK(f.degrees() == std::vector<int>{2, 2, 2, 2, 2, 0});
    CHECK_FALSE(f.is_connected());

    const Graph m = modified_petersen();
    CHECK(m.order() == 10);
    CHECK(m.edge_count() == 15);
    for (int d : m.degrees()) CHECK(d == 3);
    CHECK(m.is_connected());
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    const Graph p5 = paley_graph(5);  // C_5 is self-complementary
    CHECK(complement(p5) == Graph(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(2 + static_cast<int>(rng() % 12), rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("seidel switching") {
    const Graph k3 = complete_graph(3);
    CHECK(seidel_switch(k3, {}) == k3);
    CHECK(seidel_switch(k3, {0, 1, 2}) == k3);
    // Switching K_3 at {0} removes the two cross edges, keeps {1,2}.
    CHECK(seidel_switch(k3, {0}) == Graph(3, {{1, 2}}));
    CHECK_THROWS_AS(seidel_switch(k3, {3}), index_error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(n, rng);
        const VertexSet x = random_subset(n, rng);
        CHECK(seidel_switch(seidel_switch(g, x), x) == g);
    }
}

TEST_CASE("edge-list format") {
    CHECK(parse_edge_list("n 2\n0 1") == complete_graph(2));
    CHECK(parse_edge_list("# comment\n\nn 3\n0 1 # trailing\n1 2\n") ==
          Graph(3, {{0, 1}, {1, 2}}));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(1 + static_cast<int>(rng() % 14), rng);
        CHECK(parse_edge_list(write_edge_list(g)) == g);
    }

    CHECK_THROWS_WITH_AS(parse_edge_list(""), "line 1: empty input, expected header \"n <order>\"",
                         parse_error);
    CHECK_THROWS_AS(parse_edge_list("m 3\n0 1"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 x"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 3"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 3\n1 1"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1\n1 0"), parse_error);
    bool threw = false;
    try {
        parse_edge_list("n 3\n0 1\n\n# gap\n0 9");
    } catch (const parse_error& e) {
        threw = true;
        CHECK(e.line() == 5);  // line numbers count blanks and comments
    }
    CHECK(threw);
}

TEST_CASE("graph6 format") {
    // Hand-decoded: 'C' = order 4, '~' = 63 = all six upper-triangle bits.
    CHECK(parse_graph6("C~") == complete_graph(4));
    // 'D~{': order 5, bit groups 111111 111000 pad to the 10 pairs of K_5.
    CHECK(parse_graph6("D~{") == complete_graph(5));
    // 'CF' = order 4, bits 000111: pairs (0,3),(1,3),(2,3) — the star K_{1,3}
    // centered at vertex 3.
    CHECK(parse_graph6("CF") == Graph(4, {{0, 3}, {1, 3}, {2, 3}}));
    CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));

    CHECK(write_graph6(complete_graph(5)) == "D~{");
    CHECK(write_graph6(Graph(4, {{0, 3}, {1, 3}, {2, 3}})) == "CF");

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(1 + static_cast<int>(rng() % 70), rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }

    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("C"), parse_error);       // truncated bits
    CHECK_THROWS_AS(parse_graph6("C!"), parse_error);      // byte below 63
    CHECK_THROWS_AS(parse_graph6("C~ C~"), parse_error);   // trailing garbage
}

TEST_CASE("format sniffing") {
    CHECK(parse_graph_auto("n 2\n0 1") == complete_graph(2));
    CHECK(parse_graph_auto("C~") == complete_graph(4));
    // A graph6 string of order 47 starts with the byte 'n'; only "n <int>"
    // means edge list, so it must still sniff as graph6.
    std::mt19937_64 rng(19);
    const Graph g47 = random_graph(47, rng);
    CHECK(write_graph6(g47).front() == 'n');
    CHECK(parse_graph_auto(write_graph6(g47)) == g47);
}
