#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dmp/graph.hpp"
#include "dmp/path.hpp"
#include "dmp/solver.hpp"
#include "oracles.hpp"

using namespace dmp;

namespace {

Graph fan(int n) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(0, v);
    for (int v = 1; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);          // outer cycle
        b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        b.add_edge(i, 5 + i);                // spokes
    }
    return b.build();
}

Graph random_graph(std::mt19937_64& rng, int n) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() & 1) b.add_edge(u, v);
    return b.build();
}

}  // namespace

TEST_CASE("frozen mp values") {
    CHECK(mp_value(make_empty(1)) == 1);
    CHECK(mp_value(make_empty(5)) == 1);
    CHECK(mp_value(make_path(2)) == 2);
    CHECK(mp_value(make_path(4)) == 3);  // 1,2,2 but never 1,2,2,1
    CHECK(mp_value(make_cycle(6)) == 6);
    CHECK(mp_value(make_complete(7)) == 7);
    CHECK(mp_value(make_complete_bipartite(4, 2)) == 2);
    CHECK(mp_value(make_complete_bipartite(1, 4)) == 2);  // star
    CHECK(mp_value(fan(7)) == 6);
    CHECK(mp_value(petersen()) == 10);  // 3-regular with a hamiltonian path
}

TEST_CASE("solver agrees with the naive enumerator on all graphs up to 5") {
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t total = 1ull << edge_slot_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            REQUIRE(mp_value(g) == oracle::mp_naive(g));
        }
    }
}

TEST_CASE("solver agrees with the naive enumerator on random 6 and 7 vertex graphs") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = random_graph(rng, 6 + static_cast<int>(rng() % 2));
        REQUIRE(mp_value(g) == oracle::mp_naive(g));
    }
}

TEST_CASE("witness is a real monotone path and reruns identically") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 10));
        MpResult a = mp_exact(g);
        MpResult b = mp_exact(g);
        REQUIRE(a.value == b.value);
        REQUIRE(a.witness.vertices == b.witness.vertices);
        REQUIRE(validate_path(a.witness, g));
        REQUIRE(a.witness.length() == a.value);
    }
}

TEST_CASE("both direction witnesses") {
    Graph p4 = make_path(4);
    auto [up, down] = mp_both_directions_witness(p4);
    CHECK(up.length() == 3);
    CHECK(down.length() == 3);
    CHECK(validate_path(up, p4));
    CHECK(validate_path(down, p4));
    CHECK(std::is_sorted(up.degree_seq.begin(), up.degree_seq.end()));
    CHECK(std::is_sorted(down.degree_seq.rbegin(), down.degree_seq.rend()));
}

TEST_CASE("strict variant never beats the relaxed one") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 8));
        CHECK(mp_value(g, true) <= mp_value(g));
    }
    CHECK(mp_value(make_cycle(5), true) == 1);  // regular, nothing strict
    CHECK(mp_value(make_path(4), true) == 2);
}

TEST_CASE("mp equals 1 exactly on edgeless graphs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8));
        CHECK((mp_value(g) == 1) == (g.edge_count() == 0));
    }
}

TEST_CASE("threshold query matches the full value") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 6));
        int value = mp_value(g);
        for (int k = 1; k <= g.order(); ++k)
            REQUIRE(has_dmp_of_length(g, k) == (value >= k));
    }
}

TEST_CASE("clique independence and coloring against naive enumeration") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        REQUIRE(clique_number(g) == oracle::clique_naive(g));
        REQUIRE(independence_number(g) == oracle::alpha_naive(g));
        REQUIRE(chromatic_number(g) == oracle::chromatic_naive(g));
    }
}

TEST_CASE("frozen chromatic values") {
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(make_complete(7)) == 7);
    CHECK(chromatic_number(make_complete_bipartite(3, 3)) == 2);
    CHECK(chromatic_number(make_cycle(5)) == 3);
    CHECK(chromatic_number(make_cycle(6)) == 2);
    CHECK(chromatic_number(make_empty(4)) == 1);
    CHECK(clique_number(make_complete_bipartite(3, 3)) == 2);
    CHECK(independence_number(make_complete_bipartite(3, 3)) == 3);
}

TEST_CASE("coloring refuses graphs above the cap") {
    CHECK_THROWS_AS(chromatic_number(make_path(33)), capacity_error);
    CHECK(chromatic_number(make_path(33), 40) == 2);
}

TEST_CASE("lower bound chain holds on random graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 15));
        LowerBoundChain c = lower_bound_chain(g);
        int mp = mp_value(g);
        REQUIRE(mp >= c.chi);
        REQUIRE(c.chi >= c.omega);
        REQUIRE(c.chi >= c.ceil_n_over_alpha);
    }
}

TEST_CASE("corollary report") {
    CorollaryReport rep = check_corollary_bounds(petersen(), 3);
    CHECK(rep.n == 10);
    CHECK(rep.mp == 10);
    CHECK(rep.omega == 2);
    CHECK(rep.alpha == 4);
    CHECK(rep.all_hold());
    REQUIRE(rep.k1r_free.has_value());
    CHECK_FALSE(*rep.k1r_free);  // petersen contains K_{1,3}

    CorollaryReport star = check_corollary_bounds(make_cycle(9), 3);
    REQUIRE(star.k1r_free.has_value());
    CHECK(*star.k1r_free);  // max degree 2 cannot host a 3-star
    REQUIRE(star.star_bound.has_value());
    CHECK(*star.star_bound == 2);  // ceil(2/2) + 1
    CHECK(star.all_hold());

    CHECK_THROWS_AS(check_corollary_bounds(make_path(3), 2),
                    std::invalid_argument);
}

TEST_CASE("mp 2 characterization on known graphs") {
    BipartiteDominancePartition star = characterize_mp2(make_complete_bipartite(1, 4));
    CHECK(star.valid);
    BipartiteDominancePartition p4 = characterize_mp2(make_path(4));
    CHECK_FALSE(p4.valid);
    BipartiteDominancePartition k42 = characterize_mp2(make_complete_bipartite(4, 2));
    CHECK(k42.valid);
    CHECK(std::popcount(k42.part_a) + std::popcount(k42.part_b) == 6);

    CHECK_THROWS_AS(characterize_mp2(make_empty(4)), std::invalid_argument);
    CHECK_THROWS_AS(characterize_mp2(make_path(2)), std::invalid_argument);
}

TEST_CASE("characterization matches the solver on random connected graphs") {
    std::mt19937_64 rng(222);
    int seen = 0;
    while (seen < 300) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 5));
        if (!g.is_connected()) continue;
        ++seen;
        REQUIRE(characterize_mp2(g).valid == (mp_value(g) == 2));
    }
}
