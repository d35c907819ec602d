#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmp/nordhaus.hpp"
#include "dmp/solver.hpp"

using namespace dmp;

TEST_CASE("sum records on known graphs") {
    NgRecord c5 = ng_sum(make_cycle(5));
    CHECK(c5.mp_g == 5);
    CHECK(c5.mp_gbar == 5);  // self complementary
    CHECK(c5.sum == 10);
    CHECK(c5.lower_bound == 5);
    CHECK(c5.upper_bound == 10);
    CHECK(c5.within_bounds);

    NgRecord k4 = ng_sum(make_complete(4));
    CHECK(k4.sum == 4 + 1);
    CHECK(k4.lower_bound == 4);
    CHECK(k4.within_bounds);

    NgRecord single = ng_sum(make_empty(1));
    CHECK(single.sum == 2);
    CHECK(single.lower_bound == 2);
}

TEST_CASE("lower bound is the least s with s squared at least 4n") {
    CHECK(ng_lower_bound(1) == 2);
    CHECK(ng_lower_bound(4) == 4);
    CHECK(ng_lower_bound(5) == 5);
    CHECK(ng_lower_bound(9) == 6);
    CHECK(ng_lower_bound(16) == 8);
    CHECK(ng_lower_bound(17) == 9);
}

TEST_CASE("cycle pair attains the ceiling") {
    for (int n = 5; n <= 12; ++n) {
        auto [cyc, rest] = gen_ng_upper(n);
        CHECK(cyc.edge_count() == n);
        CHECK(rest.edge_count() == static_cast<long long>(n) * (n - 1) / 2 - n);
        CHECK(mp_value(cyc) + mp_value(rest) == 2 * n);
    }
    CHECK_THROWS_AS(gen_ng_upper(4), std::invalid_argument);
    ConstructionCert cert = gen_ng_upper_cert(8);
    CHECK(cert.claims.mp == 8);
    CHECK(cert.graph.edge_count() == 28 - 8);
}

TEST_CASE("clique windows by parity of the root") {
    CHECK(ng_clique_sizes(16) == std::vector<int>{2, 3, 5, 6});
    CHECK(ng_clique_sizes(25) == std::vector<int>{3, 4, 5, 6, 7});
    CHECK(ng_clique_sizes(36) == std::vector<int>{3, 4, 5, 7, 8, 9});
    CHECK(ng_clique_sizes(4) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(ng_clique_sizes(12), std::invalid_argument);
}

TEST_CASE("clique union lands on the floor bound") {
    Graph g16 = gen_ng_cliques(16);
    CHECK(mp_value(g16) + mp_value(g16.complement()) == 10);  // floor(5*4/2)
    Graph g36 = gen_ng_cliques(36);
    CHECK(mp_value(g36) + mp_value(g36.complement()) == 15);  // floor(5*6/2)
    NgRecord rec = ng_sum(gen_ng_cliques(25));
    CHECK(rec.sum == 12);
    CHECK(rec.within_bounds);
}

TEST_CASE("exhaustive audit over all labeled graphs") {
    NgAuditResult res = ng_exhaustive_audit(4);
    CHECK(res.graphs == 64);
    CHECK(res.bounds_hold);
    CHECK(res.chi_checked);
    CHECK(res.chi_chain_holds);
    CHECK(res.max_sum >= 6);  // the 4-cycle and its two disjoint edges give 6
    CHECK(res.max_sum <= 8);
    long long total = 0;
    for (auto [sum, count] : res.histogram) {
        CHECK(sum >= res.min_sum);
        CHECK(sum <= res.max_sum);
        total += count;
    }
    CHECK(total == 64);
    CHECK(graph6_decode(res.min_witness).order() == 4);

    CHECK_THROWS_AS(ng_exhaustive_audit(8), capacity_error);
}

TEST_CASE("audits are worker invariant") {
    NgAuditResult one = ng_exhaustive_audit(5, 1);
    NgAuditResult three = ng_exhaustive_audit(5, 3);
    CHECK(one.min_sum == three.min_sum);
    CHECK(one.max_sum == three.max_sum);
    CHECK(one.min_witness == three.min_witness);
    CHECK(one.max_witness == three.max_witness);
    CHECK(one.histogram == three.histogram);

    NgAuditResult s1 = ng_sampled_audit(10, 150, 7, 1);
    NgAuditResult s4 = ng_sampled_audit(10, 150, 7, 4);
    CHECK(s1.min_sum == s4.min_sum);
    CHECK(s1.max_sum == s4.max_sum);
    CHECK(s1.min_witness == s4.min_witness);
    CHECK(s1.histogram == s4.histogram);
}

TEST_CASE("sampled audit stays within bounds on mid sizes") {
    for (int n : {9, 12, 20}) {
        NgAuditResult res = ng_sampled_audit(n, 60, 2024, 2);
        CHECK(res.graphs == 60);
        CHECK(res.bounds_hold);
        CHECK(res.chi_checked);  // n is under the coloring cap
        CHECK(res.chi_chain_holds);
    }
    NgAuditResult big = ng_sampled_audit(40, 5, 1, 1);
    CHECK(big.bounds_hold);
    CHECK_FALSE(big.chi_checked);
}
