#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dmp/graph.hpp"

using namespace dmp;

TEST_CASE("builder rejects bad input") {
    CHECK_THROWS_AS(GraphBuilder(0), std::invalid_argument);
    CHECK_THROWS_AS(GraphBuilder(65), capacity_error);
    GraphBuilder b(4);
    CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 4), std::invalid_argument);
    b.add_edge(2, 3);
    b.add_edge(3, 2);  // duplicate collapses
    CHECK(b.build().edge_count() == 1);
}

TEST_CASE("known graph6 strings") {
    Graph k3 = graph6_decode("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == make_complete(3));

    Graph one = graph6_decode("@");
    CHECK(one.order() == 1);
    CHECK(one.edge_count() == 0);

    Graph k4 = graph6_decode("C~");
    CHECK(k4 == make_complete(4));

    CHECK(graph6_encode(make_complete(3)) == "Bw");
    CHECK(graph6_encode(make_empty(1)) == "@");
}

TEST_CASE("decode errors carry the byte offset") {
    CHECK_THROWS_AS(graph6_decode(""), parse_error);
    CHECK_THROWS_AS(graph6_decode("B"), parse_error);      // missing data
    CHECK_THROWS_AS(graph6_decode("Bw "), parse_error);    // trailing junk
    CHECK_THROWS_AS(graph6_decode("B\x1f"), parse_error);  // byte below range
    try {
        graph6_decode("Bw ");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
    }
    // 4-byte header encoding n = 100000 overflows the vertex cap
    CHECK_THROWS_AS(graph6_decode("~A?~?????"), capacity_error);
}

TEST_CASE("round trip over every small labeled graph") {
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t total = 1ull << edge_slot_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            Graph back = graph6_decode(graph6_encode(g));
            REQUIRE(back == g);
        }
    }
}

TEST_CASE("round trip on random graphs up to the cap") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 63);
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() & 1) b.add_edge(u, v);
        Graph g = b.build();
        Graph back = graph6_decode(graph6_encode(g));
        REQUIRE(back == g);
        REQUIRE(back.edge_count() == g.edge_count());
    }
}

TEST_CASE("long form header survives a round trip") {
    Graph g = make_cycle(63);
    std::string s = graph6_encode(g);
    CHECK(s[0] == '~');
    CHECK(graph6_decode(s) == g);
}

TEST_CASE("complement is an involution and splits the edge slots") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() & 1) b.add_edge(u, v);
        Graph g = b.build();
        Graph gc = g.complement();
        REQUIRE(gc.complement() == g);
        REQUIRE(g.edge_count() + gc.edge_count() ==
                static_cast<long long>(n) * (n - 1) / 2);
        for (int v = 0; v < n; ++v)
            REQUIRE(g.degree(v) + gc.degree(v) == n - 1);
    }
}

TEST_CASE("edge mask order matches graph6 column order") {
    // slot j(j-1)/2 + i is edge {i, j}; flipping one low slot must flip the
    // matching early bit of the encoding
    Graph a = graph_from_edge_mask(4, 0b000001);  // slot 0 = {0,1}
    CHECK(a.adjacent(0, 1));
    Graph b = graph_from_edge_mask(4, 0b000100);  // slot 2 = {1,2}
    CHECK(b.adjacent(1, 2));
    CHECK(edge_slot_count(7) == 21);
    CHECK(graph_from_edge_mask(5, (1ull << 10) - 1) == make_complete(5));
}

TEST_CASE("standard families") {
    Graph p4 = make_path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.is_connected());
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);

    Graph c6 = make_cycle(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.max_degree() == 2);

    Graph k33 = make_complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    CHECK(k33.max_degree() == 3);

    Graph multi = make_complete_multipartite({1, 2, 4});
    CHECK(multi.order() == 7);
    CHECK(multi.edge_count() == 1 * 2 + 1 * 4 + 2 * 4);

    CHECK_FALSE(make_empty(3).is_connected());
    CHECK(make_empty(1).is_connected());
}

TEST_CASE("induced subgraph keeps adjacency and relabels densely") {
    Graph c5 = make_cycle(5);
    // keep 0, 1, 3: edge 0-1 survives, 3 ends up isolated
    Graph sub = induced_subgraph(c5, 0b01011);
    CHECK(sub.order() == 3);
    CHECK(sub.edge_count() == 1);
    CHECK(sub.adjacent(0, 1));
    CHECK(sub.degree(2) == 0);
}

TEST_CASE("degree profile") {
    DegreeProfile prof = degree_profile(make_complete_bipartite(4, 2));
    CHECK(prof.degrees == std::vector<int>{2, 2, 2, 2, 4, 4});
    CHECK(prof.sorted_multiset == std::vector<int>{2, 2, 2, 2, 4, 4});
}
