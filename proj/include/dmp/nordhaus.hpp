#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dmp/constructions.hpp"
#include "dmp/graph.hpp"

namespace dmp {

struct NgRecord {
    int n = 0;
    int mp_g = 0;
    int mp_gbar = 0;
    int sum = 0;
    int lower_bound = 0;  // least s with s^2 >= 4n, i.e. ceil(2 sqrt n)
    int upper_bound = 0;  // 2n
    bool within_bounds = false;
};

NgRecord ng_sum(const Graph& g);
int ng_lower_bound(int n);

// (C_n, K_n minus that cycle): both sides reach mp = n once n >= 5, so the
// pair meets the 2n ceiling. Verified by the solver before returning.
std::pair<Graph, Graph> gen_ng_upper(int n);
ConstructionCert gen_ng_upper_cert(int n);  // the complement side

// Disjoint cliques with the size window dictated by the parity of sqrt(n);
// their union and its complement add up to floor(5 sqrt(n) / 2). Requires a
// perfect square; sizes are re-validated and the solver confirms both sides.
std::vector<int> ng_clique_sizes(int n);
Graph gen_ng_cliques(int n);
ConstructionCert gen_ng_cliques_cert(int n);

struct NgAuditResult {
    int n = 0;
    long long graphs = 0;
    int min_sum = 0;
    int max_sum = 0;
    int lower_bound = 0;
    int upper_bound = 0;
    bool bounds_hold = false;
    bool chi_checked = false;
    bool chi_chain_holds = true;  // mp(G)+mp(~G) >= chi(G)+chi(~G) throughout
    std::map<int, long long> histogram;
    std::string min_witness;  // graph6 of the first graph attaining min_sum
    std::string max_witness;
};

// Every labeled graph on n <= 7 vertices; also checks the chromatic sum
// comparison when chi is computable.
NgAuditResult ng_exhaustive_audit(int n, int workers = 1);

// Uniform random edge masks for larger n, deterministic per seed.
NgAuditResult ng_sampled_audit(int n, long long samples, std::uint64_t seed,
                               int workers = 1);

}  // namespace dmp
